#include "fialg/jordan.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "fialg/error.hpp"

namespace fialg {

namespace {

std::string describe(const Witness& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.indices.size(); ++i) os << (i ? ", " : "") << w.indices[i];
  os << ")";
  return os.str();
}

bool in_span(std::span<const StructAlgebra::Term> terms, const std::vector<bool>& allowed) {
  return std::all_of(terms.begin(), terms.end(), [&](const auto& t) { return allowed[t.index]; });
}

}  // namespace

NearSumSplit NearSumSplit::incidence(const IncidenceAlgebra& fi) {
  NearSumSplit s;
  s.algebra = fi.algebra();
  for (std::size_t i = 0; i < fi.dim(); ++i) (fi.is_diagonal_index(i) ? s.diagonal : s.strict).push_back(i);
  return s;
}

void NearSumSplit::validate() const {
  const std::size_t d = algebra->dim();
  std::vector<int> seen(d, 0);
  for (auto i : diagonal) ++seen.at(i);
  for (auto i : strict) ++seen.at(i);
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
    throw Error(ErrorKind::PreconditionFailed, "split index sets do not partition the basis");
  std::vector<bool> in_a0(d, false), in_a1(d, false);
  for (auto i : diagonal) in_a0[i] = true;
  for (auto i : strict) in_a1[i] = true;
  for (auto i : diagonal)
    for (auto j : diagonal)
      if (!in_span(algebra->product(i, j), in_a0))
        throw Error(ErrorKind::PreconditionFailed, "A0 is not closed under products at (" + std::to_string(i) + ", " +
                                                       std::to_string(j) + ")");
  for (auto i : strict)
    for (std::size_t j = 0; j < d; ++j)
      if (!in_span(algebra->product(i, j), in_a1) || !in_span(algebra->product(j, i), in_a1))
        throw Error(ErrorKind::PreconditionFailed, "A1 is not an ideal at (" + std::to_string(i) + ", " +
                                                       std::to_string(j) + ")");
}

LinMap from_order_map(const OrderMap& m, const IncidenceAlgebra& source, const IncidenceAlgebra& target) {
  if (!m.is_valid()) throw Error(ErrorKind::PreconditionFailed, "order map is not an order (anti-)isomorphism");
  if (!(*m.source == source.poset()) || !(*m.target == target.poset()))
    throw Error(ErrorKind::ContextMismatch, "order map does not connect the given incidence algebras");
  const RingSpec ring = source.ring();
  Matrix mat(ring, target.dim(), source.dim());
  for (std::size_t i = 0; i < source.dim(); ++i) {
    const auto [x, y] = source.pair_at(i);
    const std::size_t mx = m.images[x], my = m.images[y];
    mat(m.reversing ? target.index_of(my, mx) : target.index_of(mx, my), i) = RingValue::one(ring);
  }
  return LinMap(source.algebra(), target.algebra(), std::move(mat));
}

LinMap conjugate_by_unit(const FinSeries& u, const IncidenceAlgebra& fi) {
  const FinSeries u_inv = unit_inverse(u);
  Matrix mat(fi.ring(), fi.dim(), fi.dim());
  for (std::size_t i = 0; i < fi.dim(); ++i) {
    const auto [x, y] = fi.pair_at(i);
    const FinSeries image = convolve(convolve(u_inv, fi.unit_series(x, y)), u);
    mat.set_column(i, fi.element(image).coords());
  }
  return LinMap(fi.algebra(), fi.algebra(), std::move(mat));
}

LinMap near_sum_build(const LinMap& psi, const LinMap& theta, const NearSumSplit& split, Exec exec) {
  if (!same_algebra(psi.domain(), theta.domain()) || !same_algebra(psi.codomain(), theta.codomain()) ||
      !same_algebra(psi.domain(), split.algebra))
    throw Error(ErrorKind::ContextMismatch, "psi, theta and the split must share domain and codomain");
  split.validate();

  std::vector<std::string> violations;
  const CheckOptions opts{.exec = exec};
  if (auto hom = check_homomorphism(psi, false, opts); !hom.pass)
    violations.push_back("psi is not a homomorphism at " + describe(hom.witnesses.front()));
  if (auto anti = check_homomorphism(theta, true, opts); !anti.pass)
    violations.push_back("theta is not an anti-homomorphism at " + describe(anti.witnesses.front()));
  for (auto i : split.diagonal)
    if (psi.column(i) != theta.column(i)) {
      violations.push_back("psi and theta disagree on A0 at basis index " + std::to_string(i));
      break;
    }
  const auto& cod = *psi.codomain();
  bool annihilation_reported = false;
  for (auto i : split.strict) {
    if (annihilation_reported) break;
    const auto pi = psi.column(i), ti = theta.column(i);
    for (auto j : split.strict) {
      const auto pj = psi.column(j), tj = theta.column(j);
      const auto zero = std::vector<RingValue>(cod.dim(), RingValue::zero(cod.ring()));
      if (cod.multiply(pi, tj) != zero || cod.multiply(ti, pj) != zero) {
        violations.push_back("annihilation psi(a)theta(b) = theta(a)psi(b) = 0 fails on A1 at (" +
                             std::to_string(i) + ", " + std::to_string(j) + ")");
        annihilation_reported = true;
        break;
      }
    }
  }
  if (!violations.empty()) {
    std::string msg;
    for (const auto& v : violations) msg += (msg.empty() ? "" : "; ") + v;
    throw Error(ErrorKind::PreconditionFailed, msg);
  }

  Matrix mat = psi.matrix();
  for (auto i : split.strict) {
    auto col = psi.column(i);
    const auto t = theta.column(i);
    for (std::size_t r = 0; r < col.size(); ++r) col[r] += t[r];
    mat.set_column(i, col);
  }
  return LinMap(psi.domain(), psi.codomain(), std::move(mat));
}

LinMap random_jordan_iso(const IncidenceAlgebra& fi, std::uint64_t seed, const RandomJordanOptions& options) {
  const RingSpec ring = fi.ring();
  if (!is_two_torsionfree(ring) && !options.allow_torsion)
    throw Error(ErrorKind::TorsionRefused, ring.name() + " has 2-torsion");
  std::mt19937_64 gen(seed);
  const Poset& p = fi.poset();
  const std::size_t n = p.size();
  constexpr std::size_t enumeration_limit = 8;

  // Per component: an automorphism or anti-automorphism tau of the component.
  std::vector<std::size_t> tau(n);
  std::vector<bool> reversed(n, false);
  for (const auto& comp : p.components()) {
    auto sub = std::make_shared<const Poset>(p.induced(comp));
    std::vector<OrderMap> autos, antis;
    if (comp.size() <= enumeration_limit) {
      autos = order_isomorphisms(sub, sub, false);
      antis = order_isomorphisms(sub, sub, true);
    }
    const bool reverse = !antis.empty() && std::bernoulli_distribution(0.5)(gen);
    const auto& pool = reverse ? antis : autos;
    std::vector<std::size_t> local(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) local[i] = i;
    if (!pool.empty()) local = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(gen)].images;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      tau[comp[i]] = comp[local[i]];
      reversed[comp[i]] = reverse;
    }
  }
  Matrix psi(ring, fi.dim(), fi.dim()), theta(ring, fi.dim(), fi.dim());
  for (std::size_t i = 0; i < fi.dim(); ++i) {
    const auto [x, y] = fi.pair_at(i);
    const RingValue one = RingValue::one(ring);
    if (x == y) {
      psi(fi.index_of(tau[x], tau[x]), i) = one;
      theta(fi.index_of(tau[x], tau[x]), i) = one;
    } else if (reversed[x]) {
      theta(fi.index_of(tau[y], tau[x]), i) = one;
    } else {
      psi(fi.index_of(tau[x], tau[y]), i) = one;
    }
  }
  LinMap phi = near_sum_build(LinMap(fi.algebra(), fi.algebra(), std::move(psi)),
                              LinMap(fi.algebra(), fi.algebra(), std::move(theta)), NearSumSplit::incidence(fi));

  if (n <= enumeration_limit) {
    auto autos = order_isomorphisms(fi.poset_ptr(), fi.poset_ptr(), false);
    const auto& sigma = autos[std::uniform_int_distribution<std::size_t>(0, autos.size() - 1)(gen)];
    phi = compose(from_order_map(sigma, fi, fi), phi);
  }

  FinSeries u(fi.poset_ptr(), ring);
  std::bernoulli_distribution fill(0.5);
  for (std::size_t i = 0; i < fi.dim(); ++i) {
    const auto [x, y] = fi.pair_at(i);
    if (x == y)
      u.set(x, x, random_unit(ring, gen));
    else if (fill(gen))
      u.set(x, y, random_scalar(ring, gen));
  }
  phi = compose(conjugate_by_unit(u, fi), phi);

  if (options.rebase_codomain) {
    const Matrix t = random_basis_change(ring, fi.dim(), gen, fi.dim() / 2);
    phi = compose(rebase(fi.algebra(), t).iso, phi);
  }
  return phi;
}

JordanIso::JordanIso(IncidencePtr fi, LinMap phi, const JordanOptions& options)
    : fi_(std::move(fi)), phi_(std::move(phi)), inverse_(phi_), exec_(options.exec) {
  if (!same_algebra(phi_.domain(), fi_->algebra()))
    throw Error(ErrorKind::ContextMismatch, "map domain is not the given incidence algebra");
  if (!is_two_torsionfree(phi_.ring()) && !options.allow_torsion)
    throw Error(ErrorKind::TorsionRefused,
                phi_.ring().name() + " is not 2-torsionfree (pass the torsion override to proceed anyway)");
  inverse_ = invert(phi_);
  jordan_check_ = check_jordan(phi_, {.exec = exec_, .allow_torsion = options.allow_torsion});
  if (options.require_jordan && !jordan_check_.pass)
    throw Error(ErrorKind::NotJordan, "polarized Jordan identity fails at basis tuple " +
                                          describe(jordan_check_.witnesses.front()) + " (" +
                                          jordan_check_.witnesses.front().detail + ")");
  for (std::size_t x = 0; x < fi_->diagonal_count(); ++x) idempotents_.push_back(phi_.image_of_basis(x));
}

AlgElem JordanIso::subset_image(const std::vector<bool>& members) const {
  AlgElem out = AlgElem::zero(codomain());
  for (std::size_t x = 0; x < members.size(); ++x)
    if (members[x]) out += idempotents_.at(x);
  return out;
}

Decomposition decompose(const JordanIso& iso) {
  const auto& fi = iso.fi();
  const RingSpec ring = fi.ring();
  const std::size_t dc = iso.codomain()->dim();
  Matrix psi(ring, dc, fi.dim()), theta(ring, dc, fi.dim());
  for_each_index(fi.dim(), iso.exec(), [&](std::size_t i) {
    const auto [x, y] = fi.pair_at(i);
    if (x == y) {
      psi.set_column(i, iso.idempotent(x).coords());
      theta.set_column(i, iso.idempotent(x).coords());
      return;
    }
    const AlgElem unit = iso.basis_image(i);
    psi.set_column(i, (iso.idempotent(x) * unit * iso.idempotent(y)).coords());
    theta.set_column(i, (iso.idempotent(y) * unit * iso.idempotent(x)).coords());
  });
  Decomposition d{iso.fi_ptr(),
                  iso.phi(),
                  LinMap(fi.algebra(), iso.codomain(), std::move(psi)),
                  LinMap(fi.algebra(), iso.codomain(), std::move(theta)),
                  NearSumSplit::incidence(fi),
                  {}};
  d.report = verify_near_sum(d, iso.exec());
  return d;
}

Report verify_near_sum(const Decomposition& d, Exec exec) {
  Report report;
  const CheckOptions opts{.exec = exec};
  auto psi_hom = check_homomorphism(d.psi, false, opts);
  psi_hom.name = "psi_homomorphism";
  report.add(std::move(psi_hom));
  auto theta_anti = check_homomorphism(d.theta, true, opts);
  theta_anti.name = "theta_anti_homomorphism";
  report.add(std::move(theta_anti));

  report.add(run_check("diagonal_agreement", d.split.diagonal.size(), exec, [&](std::size_t s, CheckResult& slot) {
    const std::size_t i = d.split.diagonal[s];
    const auto p = d.psi.column(i), t = d.theta.column(i), f = d.phi.column(i);
    if (p == f && t == f)
      slot.record_pass();
    else
      slot.record_failure({{i}, p == f ? "theta(b_i) != phi(b_i)" : "psi(b_i) != phi(b_i)", p == f ? t : p, f});
  }));

  report.add(run_check("strict_sum", d.split.strict.size(), exec, [&](std::size_t s, CheckResult& slot) {
    const std::size_t i = d.split.strict[s];
    auto sum = d.psi.column(i);
    const auto t = d.theta.column(i);
    for (std::size_t r = 0; r < sum.size(); ++r) sum[r] += t[r];
    auto f = d.phi.column(i);
    if (sum == f)
      slot.record_pass();
    else
      slot.record_failure({{i}, "psi(b_i) + theta(b_i) != phi(b_i)", std::move(sum), std::move(f)});
  }));

  const auto& cod = *d.phi.codomain();
  const std::vector<RingValue> zero(cod.dim(), RingValue::zero(cod.ring()));
  report.add(run_check("mutual_annihilation", d.split.strict.size(), exec, [&](std::size_t s, CheckResult& slot) {
    const std::size_t i = d.split.strict[s];
    const auto pi = d.psi.column(i), ti = d.theta.column(i);
    for (std::size_t j : d.split.strict) {
      const auto pj = d.psi.column(j), tj = d.theta.column(j);
      auto pt = cod.multiply(pi, tj);
      if (pt == zero)
        slot.record_pass();
      else
        slot.record_failure({{i, j}, "psi(b_i) theta(b_j) != 0", std::move(pt), zero});
      auto tp = cod.multiply(ti, pj);
      if (tp == zero)
        slot.record_pass();
      else
        slot.record_failure({{i, j}, "theta(b_i) psi(b_j) != 0", std::move(tp), zero});
    }
  }));
  return report;
}

FinSeries extension_preimage(const JordanIso& iso, const FinSeries& f, Side side) {
  const auto& fi = iso.fi();
  const AlgElem image = iso.image(split_diag(f).second);
  FinSeries g(fi.poset_ptr(), fi.ring());
  for (auto [x, y] : fi.poset().strict_pairs()) {
    const AlgElem& ex = iso.idempotent(x);
    const AlgElem& ey = iso.idempotent(y);
    const AlgElem a = side == Side::psi ? ex * image * ey : ey * image * ex;
    g.set(x, y, iso.preimage(a).at(x, y));
  }
  return g;
}

AlgElem extend_via_inverse(const JordanIso& iso, const FinSeries& f, Side side) {
  return iso.image(split_diag(f).first) + iso.image(extension_preimage(iso, f, side));
}

bool equal_by_sandwiches(const JordanIso& iso, const AlgElem& a, const AlgElem& b) {
  const std::size_t n = iso.fi().diagonal_count();
  const auto& p = iso.fi().poset();
  for (std::size_t x = 0; x < n; ++x) {
    const AlgElem& ex = iso.idempotent(x);
    if (ex * a * ex != ex * b * ex) return false;
    for (std::size_t y = 0; y < n; ++y) {
      if (!p.less(x, y)) continue;
      const AlgElem& ey = iso.idempotent(y);
      if (ex * a * ey + ey * a * ex != ex * b * ey + ey * b * ex) return false;
    }
  }
  return true;
}

}  // namespace fialg
