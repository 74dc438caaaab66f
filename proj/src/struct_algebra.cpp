#include "fialg/struct_algebra.hpp"

#include <limits>
#include <random>
#include <string>

#include "fialg/error.hpp"

namespace fialg {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> nonzero_indices(std::span<const RingValue> v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.push_back(i);
  return out;
}

}  // namespace

StructAlgebra::StructAlgebra(RingSpec ring, std::size_t dim, std::vector<std::vector<Term>> products,
                             std::vector<RingValue> identity)
    : ring_(ring), dim_(dim), products_(std::move(products)), identity_(std::move(identity)) {
  if (products_.size() != dim_ * dim_) throw Error(ErrorKind::InvalidAlgebra, "structure table has wrong size");
  if (identity_.size() != dim_) throw Error(ErrorKind::InvalidAlgebra, "identity has wrong length");
  for (auto& row : products_) {
    std::erase_if(row, [](const Term& t) { return t.coeff.is_zero(); });
    for (const auto& t : row)
      if (t.index >= dim_) throw Error(ErrorKind::InvalidAlgebra, "structure constant index out of range");
  }
  validate();
}

std::vector<RingValue> StructAlgebra::multiply(std::span<const RingValue> a, std::span<const RingValue> b) const {
  std::vector<RingValue> out(dim_, RingValue::zero(ring_));
  const auto na = nonzero_indices(a);
  const auto nb = nonzero_indices(b);
  RingValue ab(ring_);
  for (std::size_t i : na)
    for (std::size_t j : nb) {
      const auto& terms = products_[i * dim_ + j];
      if (terms.empty()) continue;
      ab = a[i] * b[j];
      for (const auto& t : terms) out[t.index].add_product(ab, t.coeff);
    }
  return out;
}

std::vector<RingValue> StructAlgebra::basis_vector(std::size_t i) const {
  std::vector<RingValue> v(dim_, RingValue::zero(ring_));
  v.at(i) = RingValue::one(ring_);
  return v;
}

void StructAlgebra::validate() const {
  auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
    const auto bi = basis_vector(i), bj = basis_vector(j), bk = basis_vector(k);
    if (multiply(multiply(bi, bj), bk) != multiply(bi, multiply(bj, bk)))
      throw Error(ErrorKind::InvalidAlgebra, "not associative on basis triple (" + std::to_string(i) + ", " +
                                                 std::to_string(j) + ", " + std::to_string(k) + ")");
  };
  if (dim_ <= exhaustive_limit) {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) check_triple(i, j, k);
  } else {
    std::mt19937_64 gen(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, dim_ - 1);
    for (std::size_t s = 0; s < sampled_triples; ++s) check_triple(pick(gen), pick(gen), pick(gen));
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    const auto bi = basis_vector(i);
    if (multiply(identity_, bi) != bi || multiply(bi, identity_) != bi)
      throw Error(ErrorKind::InvalidAlgebra, "identity fails on basis vector " + std::to_string(i));
  }
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) { return a == b || (a && b && *a == *b); }

AlgElem::AlgElem(AlgebraPtr algebra, std::vector<RingValue> coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (coords_.size() != algebra_->dim())
    throw Error(ErrorKind::SizeMismatch, "element has " + std::to_string(coords_.size()) +
                                             " coordinates, algebra has dimension " +
                                             std::to_string(algebra_->dim()));
}

AlgElem AlgElem::zero(const AlgebraPtr& algebra) {
  return AlgElem(algebra, std::vector<RingValue>(algebra->dim(), RingValue::zero(algebra->ring())));
}

AlgElem AlgElem::basis(const AlgebraPtr& algebra, std::size_t i) { return AlgElem(algebra, algebra->basis_vector(i)); }

AlgElem AlgElem::identity(const AlgebraPtr& algebra) {
  const auto id = algebra->identity();
  return AlgElem(algebra, std::vector<RingValue>(id.begin(), id.end()));
}

bool AlgElem::is_zero() const {
  for (const auto& v : coords_)
    if (!v.is_zero()) return false;
  return true;
}

void AlgElem::require_same(const AlgElem& other) const {
  if (!same_algebra(algebra_, other.algebra_))
    throw Error(ErrorKind::ContextMismatch, "elements of different algebras");
}

AlgElem& AlgElem::operator+=(const AlgElem& other) {
  require_same(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& other) {
  require_same(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

AlgElem operator*(const AlgElem& a, const AlgElem& b) {
  a.require_same(b);
  return AlgElem(a.algebra_, a.algebra_->multiply(a.coords_, b.coords_));
}

AlgElem AlgElem::scaled(const RingValue& r) const {
  AlgElem out = *this;
  for (auto& v : out.coords_) v *= r;
  return out;
}

bool operator==(const AlgElem& a, const AlgElem& b) {
  return same_algebra(a.algebra_, b.algebra_) && a.coords_ == b.coords_;
}

IncidenceAlgebra::IncidenceAlgebra(PosetPtr poset, RingSpec ring) : poset_(std::move(poset)), ring_(ring) {
  const std::size_t n = poset_->size();
  for (std::size_t x = 0; x < n; ++x) pairs_.emplace_back(x, x);
  for (auto p : poset_->strict_pairs()) pairs_.push_back(p);
  index_.assign(n * n, npos);
  for (std::size_t i = 0; i < pairs_.size(); ++i) index_[pairs_[i].first * n + pairs_[i].second] = i;

  // e_xy e_uv = [y = u] e_xv
  const std::size_t d = pairs_.size();
  std::vector<std::vector<StructAlgebra::Term>> table(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto [x, y] = pairs_[i];
      const auto [u, v] = pairs_[j];
      if (y == u) table[i * d + j].push_back({index_[x * n + v], RingValue::one(ring_)});
    }
  std::vector<RingValue> identity(d, RingValue::zero(ring_));
  for (std::size_t x = 0; x < n; ++x) identity[x] = RingValue::one(ring_);
  algebra_ = std::make_shared<const StructAlgebra>(ring_, d, std::move(table), std::move(identity));
}

std::size_t IncidenceAlgebra::index_of(std::size_t x, std::size_t y) const {
  const std::size_t n = poset_->size();
  if (x >= n || y >= n) throw Error(ErrorKind::UnknownElement, "index out of range");
  const std::size_t i = index_[x * n + y];
  if (i == npos) throw Error(ErrorKind::NotComparable, poset_->label(x) + " is not below " + poset_->label(y));
  return i;
}

AlgElem IncidenceAlgebra::element(const FinSeries& f) const {
  if (!(f.ring() == ring_) || !(f.poset_ptr() == poset_ || f.poset() == *poset_))
    throw Error(ErrorKind::ContextMismatch, "series does not belong to this incidence algebra");
  std::vector<RingValue> coords(dim(), RingValue::zero(ring_));
  for (const auto& [key, v] : f.entries()) coords[index_of(key.first, key.second)] = v;
  return AlgElem(algebra_, std::move(coords));
}

FinSeries IncidenceAlgebra::series(std::span<const RingValue> coords) const {
  if (coords.size() != dim()) throw Error(ErrorKind::SizeMismatch, "coordinate vector has wrong length");
  FinSeries f(poset_, ring_);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) f.set(pairs_[i].first, pairs_[i].second, coords[i]);
  return f;
}

FinSeries IncidenceAlgebra::series(const AlgElem& a) const {
  if (!same_algebra(a.algebra(), algebra_))
    throw Error(ErrorKind::ContextMismatch, "element does not belong to this incidence algebra");
  return series(a.coords());
}

IncidencePtr to_struct_algebra(PosetPtr poset, RingSpec ring) {
  return std::make_shared<const IncidenceAlgebra>(std::move(poset), ring);
}

}  // namespace fialg
