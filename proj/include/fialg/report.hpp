#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fialg/parallel.hpp"
#include "fialg/ring.hpp"

namespace fialg {

// A concrete counterexample: which basis indices / elements were involved and
// the two evaluated sides of the failing identity.
struct Witness {
  std::vector<std::size_t> indices;
  std::string detail;
  std::vector<RingValue> lhs;
  std::vector<RingValue> rhs;
};

struct CheckResult {
  static constexpr std::size_t max_witnesses = 8;

  std::string name;
  bool pass = true;
  std::size_t evaluated = 0;  // instances checked, failures included
  std::size_t failures = 0;
  std::vector<Witness> witnesses;  // the first failures, in evaluation order

  void record_pass() { ++evaluated; }
  void record_failure(Witness w);
  void merge(CheckResult&& other);
};

struct Report {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  const CheckResult* find(std::string_view name) const;
  void add(CheckResult check) { checks.push_back(std::move(check)); }
  void append(Report other);
};

// Evaluates `n` independent slices of one check (slice i gets its own
// CheckResult) and folds them in index order, so the result does not depend on
// the driver.
template <class Fn>
CheckResult run_check(std::string name, std::size_t n, Exec exec, Fn&& eval) {
  std::vector<CheckResult> slices(n);
  for_each_index(n, exec, [&](std::size_t i) { eval(i, slices[i]); });
  CheckResult out;
  out.name = std::move(name);
  for (auto& s : slices) out.merge(std::move(s));
  return out;
}

}  // namespace fialg
