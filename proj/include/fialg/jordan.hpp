#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fialg/linmap.hpp"
#include "fialg/parallel.hpp"
#include "fialg/poset.hpp"
#include "fialg/report.hpp"
#include "fialg/series.hpp"
#include "fialg/struct_algebra.hpp"

namespace fialg {

// A = A0 (+) A1 by basis indices, A0 a subalgebra and A1 an ideal.
struct NearSumSplit {
  AlgebraPtr algebra;
  std::vector<std::size_t> diagonal;
  std::vector<std::size_t> strict;

  // D(X,R) (+) FZ(X,R) for an incidence algebra.
  static NearSumSplit incidence(const IncidenceAlgebra& fi);

  // Partition, subalgebra and ideal conditions read off the structure
  // constants. Throws PreconditionFailed.
  void validate() const;
};

// e_xy -> e_{m(x) m(y)}, or e_{m(y) m(x)} for a reversing map.
LinMap from_order_map(const OrderMap& m, const IncidenceAlgebra& source, const IncidenceAlgebra& target);

// f -> u^{-1} f u. Throws NotAUnit naming the offending element.
LinMap conjugate_by_unit(const FinSeries& u, const IncidenceAlgebra& fi);

// psi on A0, psi + theta on A1. Checks every near-sum precondition first and
// throws PreconditionFailed listing each violated clause with a witness.
LinMap near_sum_build(const LinMap& psi, const LinMap& theta, const NearSumSplit& split, Exec exec = Exec::parallel);

struct RandomJordanOptions {
  bool rebase_codomain = false;  // write the codomain in a random basis
  bool allow_torsion = false;
};

// Seeded Jordan automorphism of FI(X,R): per connected component an
// automorphism or (when one exists, by coin flip) an anti-automorphism glued
// by near_sum_build, then a random poset automorphism and a random inner
// automorphism. With `rebase_codomain` the codomain becomes FI(X,R) written in
// a random basis. Always invertible and Jordan.
LinMap random_jordan_iso(const IncidenceAlgebra& fi, std::uint64_t seed, const RandomJordanOptions& options = {});

struct JordanOptions {
  bool allow_torsion = false;
  bool require_jordan = true;  // false: build anyway, for diagnosing non-Jordan maps
  Exec exec = Exec::parallel;
};

// An invertible linear map phi: FI(X,R) -> A together with its inverse and the
// images of the diagonal idempotents. Construction enforces the standing
// hypotheses: 2-torsionfree ring (TorsionRefused), invertibility
// (NotInvertible) and, unless disabled, the Jordan identities (NotJordan).
class JordanIso {
 public:
  JordanIso(IncidencePtr fi, LinMap phi, const JordanOptions& options = {});

  const IncidenceAlgebra& fi() const noexcept { return *fi_; }
  const IncidencePtr& fi_ptr() const noexcept { return fi_; }
  const LinMap& phi() const noexcept { return phi_; }
  const LinMap& inverse() const noexcept { return inverse_; }
  const AlgebraPtr& codomain() const noexcept { return phi_.codomain(); }
  const CheckResult& jordan_check() const noexcept { return jordan_check_; }
  Exec exec() const noexcept { return exec_; }

  // phi(e_x) and phi(b_i).
  const AlgElem& idempotent(std::size_t x) const { return idempotents_.at(x); }
  AlgElem basis_image(std::size_t i) const { return phi_.image_of_basis(i); }
  AlgElem image(const FinSeries& f) const { return phi_.apply(fi_->element(f)); }
  AlgElem subset_image(const std::vector<bool>& members) const;
  FinSeries preimage(const AlgElem& a) const { return fi_->series(inverse_.apply(a)); }

 private:
  IncidencePtr fi_;
  LinMap phi_;
  LinMap inverse_;
  std::vector<AlgElem> idempotents_;
  CheckResult jordan_check_;
  Exec exec_;
};

struct Decomposition {
  IncidencePtr fi;
  LinMap phi;
  LinMap psi;    // homomorphism part
  LinMap theta;  // anti-homomorphism part
  NearSumSplit split;
  Report report;
};

// psi(e_x) = theta(e_x) = phi(e_x); for x < y
//   psi(e_xy)   = phi(e_x) phi(e_xy) phi(e_y),
//   theta(e_xy) = phi(e_y) phi(e_xy) phi(e_x),
// extended linearly. The attached report is verify_near_sum's.
Decomposition decompose(const JordanIso& iso);

// The five near-sum conditions, each as its own check:
//   psi_homomorphism, theta_anti_homomorphism, diagonal_agreement,
//   strict_sum, mutual_annihilation.
Report verify_near_sum(const Decomposition& d, Exec exec = Exec::parallel);

enum class Side { psi, theta };

// The pointwise construction through phi^{-1}: for strict f and x < y,
//   g(x,y) = phi^{-1}(phi(e_x) phi(f) phi(e_y))(x,y)   (psi side)
//   h(x,y) = phi^{-1}(phi(e_y) phi(f) phi(e_x))(x,y)   (theta side)
// applied to the strict part of f. Independent of decompose's columns.
FinSeries extension_preimage(const JordanIso& iso, const FinSeries& f, Side side);

// phi(f_D) + phi(g) (resp. phi(h)); must equal psi(f) (resp. theta(f)).
AlgElem extend_via_inverse(const JordanIso& iso, const FinSeries& f, Side side);

// a = b decided through sandwiches by the idempotent images:
//   phi(e_x) a phi(e_y) + phi(e_y) a phi(e_x) for x < y, phi(e_x) a phi(e_x) for all x.
bool equal_by_sandwiches(const JordanIso& iso, const AlgElem& a, const AlgElem& b);

}  // namespace fialg
