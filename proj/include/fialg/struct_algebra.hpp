#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "fialg/poset.hpp"
#include "fialg/ring.hpp"
#include "fialg/series.hpp"

namespace fialg {

// Finite-dimensional unital associative algebra given by structure
// constants: product(i, j) lists the nonzero coordinates of b_i b_j.
class StructAlgebra {
 public:
  struct Term {
    std::size_t index;
    RingValue coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  // Validates associativity (all basis triples when dim <= exhaustive_limit,
  // a fixed pseudo-random sample otherwise) and the identity. Throws
  // InvalidAlgebra.
  StructAlgebra(RingSpec ring, std::size_t dim, std::vector<std::vector<Term>> products,
                std::vector<RingValue> identity);

  static constexpr std::size_t exhaustive_limit = 10;
  static constexpr std::size_t sampled_triples = 200;

  const RingSpec& ring() const noexcept { return ring_; }
  std::size_t dim() const noexcept { return dim_; }
  std::span<const Term> product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
  std::span<const RingValue> identity() const noexcept { return identity_; }

  std::vector<RingValue> multiply(std::span<const RingValue> a, std::span<const RingValue> b) const;
  std::vector<RingValue> basis_vector(std::size_t i) const;

  friend bool operator==(const StructAlgebra& a, const StructAlgebra& b) {
    return a.ring_ == b.ring_ && a.dim_ == b.dim_ && a.products_ == b.products_ && a.identity_ == b.identity_;
  }

 private:
  void validate() const;

  RingSpec ring_;
  std::size_t dim_;
  std::vector<std::vector<Term>> products_;
  std::vector<RingValue> identity_;
};

using AlgebraPtr = std::shared_ptr<const StructAlgebra>;

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

// Coordinate vector in a StructAlgebra.
class AlgElem {
 public:
  AlgElem(AlgebraPtr algebra, std::vector<RingValue> coords);

  static AlgElem zero(const AlgebraPtr& algebra);
  static AlgElem basis(const AlgebraPtr& algebra, std::size_t i);
  static AlgElem identity(const AlgebraPtr& algebra);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const std::vector<RingValue>& coords() const noexcept { return coords_; }
  const RingValue& operator[](std::size_t i) const { return coords_[i]; }
  std::size_t dim() const noexcept { return coords_.size(); }
  bool is_zero() const;

  AlgElem& operator+=(const AlgElem& other);
  AlgElem& operator-=(const AlgElem& other);
  friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
  friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
  friend AlgElem operator*(const AlgElem& a, const AlgElem& b);
  AlgElem scaled(const RingValue& r) const;

  friend bool operator==(const AlgElem& a, const AlgElem& b);
  friend bool operator!=(const AlgElem& a, const AlgElem& b) { return !(a == b); }

 private:
  void require_same(const AlgElem& other) const;

  AlgebraPtr algebra_;
  std::vector<RingValue> coords_;
};

// FI(X, R) of a finite poset in structure-constant form. Basis order: the
// diagonal units e_x in element order, then e_xy for x < y lexicographically.
class IncidenceAlgebra {
 public:
  IncidenceAlgebra(PosetPtr poset, RingSpec ring);

  const Poset& poset() const noexcept { return *poset_; }
  const PosetPtr& poset_ptr() const noexcept { return poset_; }
  const RingSpec& ring() const noexcept { return ring_; }
  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  std::size_t dim() const noexcept { return pairs_.size(); }
  std::size_t diagonal_count() const noexcept { return poset_->size(); }
  bool is_diagonal_index(std::size_t i) const noexcept { return i < diagonal_count(); }

  std::pair<std::size_t, std::size_t> pair_at(std::size_t index) const { return pairs_.at(index); }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const noexcept { return pairs_; }
  // Basis index of e_xy; throws NotComparable when x !<= y.
  std::size_t index_of(std::size_t x, std::size_t y) const;

  AlgElem element(const FinSeries& f) const;
  FinSeries series(const AlgElem& a) const;
  FinSeries series(std::span<const RingValue> coords) const;
  AlgElem unit(std::size_t x, std::size_t y) const { return AlgElem::basis(algebra_, index_of(x, y)); }
  FinSeries unit_series(std::size_t x, std::size_t y) const { return FinSeries::unit(poset_, ring_, x, y); }

 private:
  PosetPtr poset_;
  RingSpec ring_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::size_t> index_;  // n*n, npos off the order
  AlgebraPtr algebra_;
};

using IncidencePtr = std::shared_ptr<const IncidenceAlgebra>;

IncidencePtr to_struct_algebra(PosetPtr poset, RingSpec ring);

}  // namespace fialg
