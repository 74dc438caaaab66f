#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace fialg {

// A finite partially ordered set. Elements are addressed by their position in
// the label list; that index order is the canonical order used by every basis
// and file format downstream.
class Poset {
 public:
  // Closes `relations` reflexively and transitively. Throws DuplicateElement,
  // UnknownElement or AntisymmetryViolation.
  static Poset from_relations(std::vector<std::string> elements,
                              const std::vector<std::pair<std::string, std::string>>& relations);
  static Poset from_index_relations(std::vector<std::string> elements,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& relations);

  static Poset chain(std::size_t n);
  static Poset antichain(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::size_t index_of(const std::string& label) const;

  bool leq(std::size_t x, std::size_t y) const { return leq_[x * size() + y] != 0; }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }
  bool comparable(std::size_t x, std::size_t y) const { return leq(x, y) || leq(y, x); }

  // { z : x <= z <= y } in index order; empty when x is not below y.
  std::vector<std::size_t> interval(std::size_t x, std::size_t y) const;
  std::vector<std::string> interval(const std::string& x, const std::string& y) const;

  // All pairs x < y, lexicographic by index.
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;
  std::vector<std::pair<std::size_t, std::size_t>> covering_pairs() const;

  // Elements sorted so that x < y implies x precedes y.
  std::vector<std::size_t> linear_extension() const;

  // Connected components of the comparability graph, each in index order.
  std::vector<std::vector<std::size_t>> components() const;

  // Sub-poset on `members` (kept in the given order).
  Poset induced(const std::vector<std::size_t>& members) const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.leq_ == b.leq_;
  }

 private:
  Poset(std::vector<std::string> labels, std::vector<unsigned char> leq)
      : labels_(std::move(labels)), leq_(std::move(leq)) {}

  std::vector<std::string> labels_;
  std::vector<unsigned char> leq_;  // row-major size() x size()
};

using PosetPtr = std::shared_ptr<const Poset>;

// Bijection between two posets that preserves (or, when `reversing`, reverses)
// the order in both directions.
struct OrderMap {
  PosetPtr source;
  PosetPtr target;
  std::vector<std::size_t> images;
  bool reversing = false;

  bool is_valid() const;
};

// Every order isomorphism (or anti-isomorphism) P -> Q, in lexicographic order
// of the image sequence. Throws SizeMismatch if |P| != |Q|. Exponential; meant
// for small posets.
std::vector<OrderMap> order_isomorphisms(const PosetPtr& p, const PosetPtr& q, bool reversing);

// Random DAG on the order 1 < 2 < ... < n: each pair i < j gets an edge with
// probability numerator/denominator, then the closure is taken. Deterministic
// for fixed arguments (std::mt19937_64 seeded with `seed`).
Poset random_poset(std::size_t n, std::uint64_t numerator, std::uint64_t denominator, std::uint64_t seed);

}  // namespace fialg
