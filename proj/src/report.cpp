#include "fialg/report.hpp"

namespace fialg {

void CheckResult::record_failure(Witness w) {
  ++evaluated;
  ++failures;
  pass = false;
  if (witnesses.size() < max_witnesses) witnesses.push_back(std::move(w));
}

void CheckResult::merge(CheckResult&& other) {
  evaluated += other.evaluated;
  failures += other.failures;
  pass = pass && other.pass;
  for (auto& w : other.witnesses) {
    if (witnesses.size() >= max_witnesses) break;
    witnesses.push_back(std::move(w));
  }
}

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const CheckResult* Report::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

void Report::append(Report other) {
  for (auto& c : other.checks) checks.push_back(std::move(c));
}

}  // namespace fialg
