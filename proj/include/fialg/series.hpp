#pragma once

#include <cstddef>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "fialg/parallel.hpp"
#include "fialg/poset.hpp"
#include "fialg/ring.hpp"

namespace fialg {

// Element of the incidence algebra of a finite poset: a sparse table of
// nonzero values on comparable pairs (x, y), x <= y. Zeros are never stored,
// so structural equality is value equality.
class FinSeries {
 public:
  using Key = std::pair<std::size_t, std::size_t>;
  using Table = std::map<Key, RingValue>;

  FinSeries(PosetPtr poset, RingSpec ring);

  static FinSeries delta(PosetPtr poset, RingSpec ring);
  // e_xy; throws NotComparable unless x <= y.
  static FinSeries unit(PosetPtr poset, RingSpec ring, std::size_t x, std::size_t y);
  // e_Y, the diagonal idempotent of a subset given as a membership mask.
  static FinSeries subset_idempotent(PosetPtr poset, RingSpec ring, const std::vector<bool>& members);
  // 1 on every comparable pair.
  static FinSeries zeta(PosetPtr poset, RingSpec ring);

  const PosetPtr& poset_ptr() const noexcept { return poset_; }
  const Poset& poset() const noexcept { return *poset_; }
  const RingSpec& ring() const noexcept { return ring_; }
  const Table& entries() const noexcept { return entries_; }
  std::size_t support_size() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }

  RingValue at(std::size_t x, std::size_t y) const;
  // Throws NotComparable when a nonzero value is placed at x !<= y.
  void set(std::size_t x, std::size_t y, const RingValue& value);
  void add_to(std::size_t x, std::size_t y, const RingValue& value);

  FinSeries& operator+=(const FinSeries& other);
  FinSeries& operator-=(const FinSeries& other);
  friend FinSeries operator+(FinSeries a, const FinSeries& b) { return a += b; }
  friend FinSeries operator-(FinSeries a, const FinSeries& b) { return a -= b; }
  FinSeries scaled(const RingValue& r) const;

  bool same_context(const FinSeries& other) const;
  friend bool operator==(const FinSeries& a, const FinSeries& b) {
    return a.same_context(b) && a.entries_ == b.entries_;
  }

 private:
  PosetPtr poset_;
  RingSpec ring_;
  Table entries_;
};

// (fg)(x,y) = sum over x <= z <= y of f(x,z) g(z,y). Walks the support of f and
// for each (x,z) the row z of g. The parallel driver splits the work by row x.
FinSeries convolve(const FinSeries& f, const FinSeries& g, Exec exec = Exec::serial);
inline FinSeries operator*(const FinSeries& f, const FinSeries& g) { return convolve(f, g); }

// e_x f e_y, by the closed form f(x,y) e_xy (zero unless x <= y).
FinSeries sandwich(const FinSeries& f, std::size_t x, std::size_t y);

// f = f_D + f_Z with f_D diagonal and f_Z vanishing on the diagonal.
std::pair<FinSeries, FinSeries> split_diag(const FinSeries& f);

enum class Truncation { above, below };
// above: keeps (x, v) with v > x.  below: keeps (u, x) with u < x.
FinSeries truncate(const FinSeries& f, std::size_t x, Truncation mode);

// Two-sided inverse of u, by the triangular recursion over intervals. Throws
// NotAUnit naming the first x whose diagonal entry is not invertible.
FinSeries unit_inverse(const FinSeries& u);

// Random series with each comparable pair filled with probability `density`.
FinSeries random_series(PosetPtr poset, RingSpec ring, std::mt19937_64& gen, double density = 0.6);

}  // namespace fialg
