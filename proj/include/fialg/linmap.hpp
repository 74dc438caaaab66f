#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "fialg/matrix.hpp"
#include "fialg/parallel.hpp"
#include "fialg/report.hpp"
#include "fialg/struct_algebra.hpp"

namespace fialg {

// R-linear map between two structure-constant algebras over the same ring.
// Column i of the matrix is the image of domain basis vector i.
class LinMap {
 public:
  LinMap(AlgebraPtr domain, AlgebraPtr codomain, Matrix matrix);

  static LinMap identity(const AlgebraPtr& algebra);
  static LinMap zero(const AlgebraPtr& domain, const AlgebraPtr& codomain);

  const AlgebraPtr& domain() const noexcept { return domain_; }
  const AlgebraPtr& codomain() const noexcept { return codomain_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  const RingSpec& ring() const noexcept { return matrix_.ring(); }

  std::vector<RingValue> column(std::size_t i) const { return matrix_.column(i); }
  AlgElem image_of_basis(std::size_t i) const { return AlgElem(codomain_, matrix_.column(i)); }
  std::vector<RingValue> apply(std::span<const RingValue> coords) const { return matrix_.apply(coords); }
  AlgElem apply(const AlgElem& a) const;

  // Copy with one matrix entry replaced; used by mutation harnesses.
  LinMap with_entry(std::size_t row, std::size_t col, const RingValue& value) const;

  friend bool operator==(const LinMap& a, const LinMap& b) {
    return same_algebra(a.domain_, b.domain_) && same_algebra(a.codomain_, b.codomain_) && a.matrix_ == b.matrix_;
  }

 private:
  AlgebraPtr domain_;
  AlgebraPtr codomain_;
  Matrix matrix_;
};

// g after f. Throws ContextMismatch unless f's codomain is g's domain.
LinMap compose(const LinMap& g, const LinMap& f);

std::optional<LinMap> try_invert(const LinMap& m);
LinMap invert(const LinMap& m);  // throws NotInvertible

struct CheckOptions {
  Exec exec = Exec::parallel;
  bool unital = false;         // also require m(1) = 1
  bool allow_torsion = false;  // let check_jordan run over rings with 2-torsion
};

// m(b_i b_j) = m(b_i) m(b_j) (or m(b_j) m(b_i) when `anti`) on every basis pair.
CheckResult check_homomorphism(const LinMap& m, bool anti, const CheckOptions& options = {});

// Polarized Jordan identities on basis tuples:
//   m(b_i b_j + b_j b_i)             = m_i m_j + m_j m_i
//   m(b_i b_j b_k + b_k b_j b_i)     = m_i m_j m_k + m_k m_j m_i
// Over a 2-torsionfree ring these are equivalent to m(a^2) = m(a)^2 and
// m(aba) = m(a) m(b) m(a) for all a, b: setting a = b in the first gives
// 2 m(a^2) = 2 m(a)^2, setting a = c in the second gives 2 m(aba) = 2 m(a)m(b)m(a),
// and both sides are multilinear. Throws TorsionRefused over rings with
// 2-torsion unless `allow_torsion`.
CheckResult check_jordan(const LinMap& m, const CheckOptions& options = {});

// The same algebra written in a new basis. Column i of `new_basis` holds the
// old coordinates of new basis vector i. `iso` maps old coordinates to new.
struct Rebased {
  AlgebraPtr algebra;
  LinMap iso;
};
Rebased rebase(const AlgebraPtr& algebra, const Matrix& new_basis);

// Invertible-over-R change of basis: a column permutation, unit scalings and
// `shears` random elementary column operations.
Matrix random_basis_change(const RingSpec& ring, std::size_t dim, std::mt19937_64& gen, std::size_t shears);

}  // namespace fialg
