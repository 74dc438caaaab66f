#include <doctest.h>

#include <random>

#include "fialg/error.hpp"
#include "fialg/jordan.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace fialg;

namespace {

const RingSpec Q = RingSpec::rationals();

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::ParseError;
}

// The mixed map on two disjoint 2-chains {1<2}, {3<4}: identity on the first
// block, the order reversal 3<->4 on the second.
struct MixedExample {
  IncidencePtr fi = to_struct_algebra(fixtures::two_chains(), Q);
  LinMap psi = LinMap::zero(fi->algebra(), fi->algebra());
  LinMap theta = LinMap::zero(fi->algebra(), fi->algebra());

  MixedExample() {
    Matrix p(Q, fi->dim(), fi->dim()), t(Q, fi->dim(), fi->dim());
    const RingValue one = RingValue::one(Q);
    const std::size_t tau[4] = {0, 1, 3, 2};
    for (std::size_t x = 0; x < 4; ++x) {
      p(fi->index_of(tau[x], tau[x]), fi->index_of(x, x)) = one;
      t(fi->index_of(tau[x], tau[x]), fi->index_of(x, x)) = one;
    }
    p(fi->index_of(0, 1), fi->index_of(0, 1)) = one;
    t(fi->index_of(2, 3), fi->index_of(2, 3)) = one;
    psi = LinMap(fi->algebra(), fi->algebra(), p);
    theta = LinMap(fi->algebra(), fi->algebra(), t);
  }
};

std::vector<PosetPtr> corpus_posets() {
  std::vector<PosetPtr> out{fixtures::chain(1),     fixtures::chain(2), fixtures::chain(3),
                            fixtures::diamond(),    fixtures::antichain(2), fixtures::two_chains()};
  for (std::uint64_t s = 0; s < 3; ++s) out.push_back(fixtures::share(random_poset(5, 1, 2, s)));
  return out;
}

}  // namespace

TEST_CASE("conjugation by units") {
  const auto fi = to_struct_algebra(fixtures::chain(2), Q);
  CHECK(conjugate_by_unit(FinSeries::delta(fi->poset_ptr(), Q), *fi) == LinMap::identity(fi->algebra()));

  const FinSeries u = FinSeries::delta(fi->poset_ptr(), Q) + fi->unit_series(0, 1);
  CHECK(unit_inverse(u) == FinSeries::delta(fi->poset_ptr(), Q) - fi->unit_series(0, 1));
  const LinMap c = conjugate_by_unit(u, *fi);
  CHECK(c.image_of_basis(fi->index_of(0, 1)) == fi->unit(0, 1));
  CHECK(c.image_of_basis(fi->index_of(0, 0)) == fi->unit(0, 0) + fi->unit(0, 1));
  CHECK(c.image_of_basis(fi->index_of(1, 1)) == fi->unit(1, 1) - fi->unit(0, 1));
  CHECK(check_homomorphism(c, false, {.unital = true}).pass);

  const auto fd = to_struct_algebra(fixtures::diamond(), RingSpec::modular(9));
  const LinMap phi = random_jordan_iso(*fd, 4);
  std::mt19937_64 gen(1);
  FinSeries v = random_series(fd->poset_ptr(), RingSpec::modular(9), gen);
  for (std::size_t x = 0; x < 4; ++x) v.set(x, x, random_unit(RingSpec::modular(9), gen));
  CHECK(check_jordan(compose(conjugate_by_unit(v, *fd), phi)).pass);
}

TEST_CASE("near-sum on a commutative incidence algebra") {
  const auto fi = to_struct_algebra(fixtures::antichain(3), Q);
  const LinMap id = LinMap::identity(fi->algebra());
  CHECK(near_sum_build(id, id, NearSumSplit::incidence(*fi)) == id);
}

TEST_CASE("mixed near-sum on two disjoint 2-chains") {
  MixedExample ex;
  const LinMap phi = near_sum_build(ex.psi, ex.theta, NearSumSplit::incidence(*ex.fi));
  CHECK(check_jordan(phi).pass);
  const CheckResult hom = check_homomorphism(phi, false);
  const CheckResult anti = check_homomorphism(phi, true);
  CHECK_FALSE(hom.pass);
  CHECK_FALSE(anti.pass);
  CHECK_FALSE(hom.witnesses.empty());
  CHECK_FALSE(anti.witnesses.empty());

  const JordanIso iso(ex.fi, phi);
  const Decomposition d = decompose(iso);
  CHECK(d.psi == ex.psi);
  CHECK(d.theta == ex.theta);
  CHECK(d.report.all_pass());
}

TEST_CASE("near-sum preconditions") {
  const auto fi = to_struct_algebra(fixtures::chain(3), Q);
  const LinMap id = LinMap::identity(fi->algebra());
  try {
    near_sum_build(id, id, NearSumSplit::incidence(*fi));
    FAIL("expected PreconditionFailed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionFailed);
    CHECK(std::string(e.what()).find("annihilation") != std::string::npos);
  }

  NearSumSplit broken = NearSumSplit::incidence(*fi);
  std::swap(broken.diagonal.front(), broken.strict.front());
  CHECK(kind_of([&] { broken.validate(); }) == ErrorKind::PreconditionFailed);
}

TEST_CASE("generated maps") {
  const auto single = to_struct_algebra(fixtures::chain(1), Q);
  CHECK(random_jordan_iso(*single, 5) == LinMap::identity(single->algebra()));

  const auto anti = to_struct_algebra(fixtures::antichain(3), RingSpec::modular(9));
  const LinMap m = random_jordan_iso(*anti, 2);
  for (std::size_t i = 0; i < anti->dim(); ++i) {
    const auto col = m.column(i);
    CHECK(std::count_if(col.begin(), col.end(), [](const RingValue& v) { return !v.is_zero(); }) == 1);
    CHECK(std::count_if(col.begin(), col.end(), [](const RingValue& v) { return v.is_one(); }) == 1);
  }

  for (const auto& p : corpus_posets())
    for (const auto& ring : fixtures::rings())
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const auto fi = to_struct_algebra(p, ring);
        const LinMap phi = random_jordan_iso(*fi, seed);
        CHECK(check_jordan(phi).pass);
        CHECK(try_invert(phi).has_value());
        CHECK(random_jordan_iso(*fi, seed) == phi);
      }
}

TEST_CASE("decomposition of the identity and the reversal on the 2-chain") {
  const auto fi = to_struct_algebra(fixtures::chain(2), Q);
  const std::size_t e1 = fi->index_of(0, 0), e2 = fi->index_of(1, 1), e12 = fi->index_of(0, 1);

  const JordanIso id(fi, LinMap::identity(fi->algebra()));
  const Decomposition d = decompose(id);
  CHECK(d.psi == LinMap::identity(fi->algebra()));
  CHECK(d.theta.image_of_basis(e12).is_zero());
  CHECK(d.theta.image_of_basis(e1) == fi->unit(0, 0));
  CHECK(d.theta.image_of_basis(e2) == fi->unit(1, 1));
  REQUIRE(d.report.checks.size() == 5);
  CHECK(d.report.all_pass());

  const auto c2 = fi->poset_ptr();
  const JordanIso rev(fi, from_order_map(order_isomorphisms(c2, c2, true).at(0), *fi, *fi));
  const Decomposition r = decompose(rev);
  CHECK(r.psi.image_of_basis(e12).is_zero());
  CHECK(r.theta.image_of_basis(e12) == fi->unit(0, 1));
  CHECK(r.report.all_pass());
  CHECK(near_sum_build(r.psi, r.theta, r.split) == rev.phi());
}

TEST_CASE("degenerate posets") {
  for (const auto& p : {fixtures::chain(1), fixtures::antichain(2), fixtures::antichain(4)}) {
    const auto fi = to_struct_algebra(p, Q);
    const JordanIso iso(fi, random_jordan_iso(*fi, 8));
    const Decomposition d = decompose(iso);
    CHECK(d.psi == iso.phi());
    CHECK(d.theta == iso.phi());
    CHECK(d.report.all_pass());
  }
}

TEST_CASE("decomposition over the corpus") {
  for (const auto& p : corpus_posets())
    for (const auto& ring : fixtures::rings())
      for (bool rebased : {false, true}) {
        const auto fi = to_struct_algebra(p, ring);
        const JordanIso iso(fi, random_jordan_iso(*fi, 11, {.rebase_codomain = rebased}));
        const Decomposition d = decompose(iso);
        CHECK(d.report.all_pass());
        CHECK(near_sum_build(d.psi, d.theta, d.split) == iso.phi());

        std::mt19937_64 gen(3);
        for (int i = 0; i < 5; ++i) {
          const FinSeries f = random_series(p, ring, gen);
          CHECK(extend_via_inverse(iso, f, Side::psi) == d.psi.apply(fi->element(f)));
          CHECK(extend_via_inverse(iso, f, Side::theta) == d.theta.apply(fi->element(f)));
          const FinSeries fd = split_diag(f).first;
          CHECK(extend_via_inverse(iso, fd, Side::psi) == iso.image(fd));
          CHECK(extension_preimage(iso, fd, Side::psi).is_zero());
        }
      }
}

TEST_CASE("oracle path on the identity") {
  const auto fi = to_struct_algebra(fixtures::chain(2), Q);
  const JordanIso id(fi, LinMap::identity(fi->algebra()));
  CHECK(extend_via_inverse(id, fi->unit_series(0, 1), Side::psi) == fi->unit(0, 1));
}

TEST_CASE("corrupted psi is caught") {
  const auto fi = to_struct_algebra(fixtures::diamond(), Q);
  const JordanIso iso(fi, random_jordan_iso(*fi, 2));
  Decomposition d = decompose(iso);
  const std::size_t col = fi->index_of(0, 1);
  d.psi = d.psi.with_entry(0, col, d.psi.matrix()(0, col) + RingValue::one(Q));
  const Report r = verify_near_sum(d);
  const bool caught = !r.find("psi_homomorphism")->pass || !r.find("strict_sum")->pass;
  CHECK(caught);
  CHECK_FALSE(r.all_pass());
  for (const auto& c : r.checks)
    if (!c.pass) CHECK_FALSE(c.witnesses.empty());
}

TEST_CASE("sandwich equality criterion") {
  const auto fi = to_struct_algebra(fixtures::diamond(), Q);
  const JordanIso iso(fi, random_jordan_iso(*fi, 6, {.rebase_codomain = true}));
  std::mt19937_64 gen(4);
  const AlgElem a = iso.image(random_series(fi->poset_ptr(), Q, gen));
  CHECK(equal_by_sandwiches(iso, a, a));
  for (std::size_t k = 0; k < a.dim(); ++k) {
    auto c = a.coords();
    c[k] += RingValue::one(Q);
    CHECK_FALSE(equal_by_sandwiches(iso, a, AlgElem(a.algebra(), c)));
  }
}

TEST_CASE("construction errors") {
  const auto fi = to_struct_algebra(fixtures::chain(2), Q);
  const LinMap id = LinMap::identity(fi->algebra());
  CHECK(kind_of([&] { JordanIso(fi, id.with_entry(2, 0, RingValue::one(Q))); }) == ErrorKind::NotJordan);
  CHECK(kind_of([&] { JordanIso(fi, LinMap::zero(fi->algebra(), fi->algebra())); }) == ErrorKind::NotInvertible);
  const auto other = to_struct_algebra(fixtures::chain(3), Q);
  CHECK(kind_of([&] { JordanIso(other, id); }) == ErrorKind::ContextMismatch);

  const auto f6 = to_struct_algebra(fixtures::chain(2), RingSpec::modular(6));
  const LinMap id6 = LinMap::identity(f6->algebra());
  CHECK(kind_of([&] { JordanIso(f6, id6); }) == ErrorKind::TorsionRefused);
  CHECK(decompose(JordanIso(f6, id6, {.allow_torsion = true})).report.all_pass());

  const JordanIso loose(fi, id.with_entry(2, 0, RingValue::one(Q)), {.require_jordan = false});
  CHECK_FALSE(loose.jordan_check().pass);
}

TEST_CASE("mixed examples are only guaranteed on disconnected posets") {
  // Every generated map on a connected poset is a homomorphism or an
  // anti-homomorphism.
  for (const auto& p : {fixtures::chain(3), fixtures::diamond()}) {
    const auto fi = to_struct_algebra(p, Q);
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const LinMap phi = random_jordan_iso(*fi, seed);
      CHECK((check_homomorphism(phi, false).pass || check_homomorphism(phi, true).pass));
    }
  }
}
