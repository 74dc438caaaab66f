#include "fialg/identities.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace fialg {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 item_rng(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) {
  return std::mt19937_64(splitmix(splitmix(splitmix(seed) ^ a) ^ b) ^ c);
}

void expect(CheckResult& slot, std::vector<std::size_t> at, const char* detail, const AlgElem& lhs,
            const AlgElem& rhs) {
  if (lhs == rhs)
    slot.record_pass();
  else
    slot.record_failure({std::move(at), detail, lhs.coords(), rhs.coords()});
}

void expect(CheckResult& slot, std::vector<std::size_t> at, const char* detail, const FinSeries& lhs,
            const FinSeries& rhs, const IncidenceAlgebra& fi) {
  if (lhs == rhs)
    slot.record_pass();
  else
    slot.record_failure({std::move(at), detail, fi.element(lhs).coords(), fi.element(rhs).coords()});
}

// Restriction of f to the pairs accepted by `keep`.
template <class Pred>
FinSeries restrict(const FinSeries& f, Pred keep) {
  FinSeries out(f.poset_ptr(), f.ring());
  for (const auto& [key, v] : f.entries())
    if (keep(key.first, key.second)) out.set(key.first, key.second, v);
  return out;
}

std::vector<bool> mask_from_bits(std::size_t n, std::uint64_t bits) {
  std::vector<bool> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = (bits >> i) & 1U;
  return m;
}

class IdentitySuite {
 public:
  IdentitySuite(const JordanIso& iso, const IdentityOptions& opts)
      : iso_(iso),
        fi_(iso.fi()),
        poset_(fi_.poset()),
        n_(poset_.size()),
        opts_(opts),
        dec_(decompose(iso)),
        zero_(AlgElem::zero(iso.codomain())) {
    std::mt19937_64 gen(opts.seed);
    for (std::size_t i = 0; i < opts.corpus_size; ++i)
      full_.push_back(random_series(fi_.poset_ptr(), fi_.ring(), gen, 0.6));
    full_.push_back(FinSeries::zeta(fi_.poset_ptr(), fi_.ring()));
    for (const auto& f : full_) {
      auto [d, z] = split_diag(f);
      diag_.push_back(std::move(d));
      strict_.push_back(std::move(z));
    }
    const auto strict_pairs = poset_.strict_pairs();
    for (std::size_t i = 0; i < strict_pairs.size() && i < 3; ++i)
      strict_.push_back(fi_.unit_series(strict_pairs[i].first, strict_pairs[i].second));
    for (std::size_t x = 0; x < n_; ++x) diag_.push_back(fi_.unit_series(x, x));
    for (const auto& f : strict_) {
      psi_strict_.push_back(psi(f));
      theta_strict_.push_back(theta(f));
    }
    for (std::size_t i = 0; i < fi_.dim(); ++i) units_.push_back(fi_.unit_series(fi_.pair_at(i).first, fi_.pair_at(i).second));

    // Subsets Y: all of them for small X, otherwise a fixed sample.
    if (n_ <= 4) {
      for (std::uint64_t bits = 0; bits < (1ULL << n_); ++bits) subsets_.push_back(mask_from_bits(n_, bits));
    } else {
      subsets_.push_back(std::vector<bool>(n_, false));
      subsets_.push_back(std::vector<bool>(n_, true));
      std::bernoulli_distribution coin(0.5);
      for (int s = 0; s < 6; ++s) {
        std::vector<bool> m(n_);
        for (std::size_t i = 0; i < n_; ++i) m[i] = coin(gen);
        subsets_.push_back(std::move(m));
      }
    }
  }

  Report run() {
    Report r;
    r.add(jordan_square());
    r.add(jordan_aba());
    r.add(polarized_triple());
    r.add(idempotent_commutation());
    r.add(idempotent_annihilation());
    r.add(coefficient_extraction());
    r.add(equality_criterion());
    r.add(diagonal_homomorphism());
    r.add(unit_coefficient(Side::psi));
    r.add(unit_coefficient(Side::theta));
    r.add(sandwich(Side::psi));
    r.add(sandwich(Side::theta));
    r.add(extension_on_units());
    r.add(oracle_agreement());
    r.add(multiplicativity(Side::psi));
    r.add(multiplicativity(Side::theta));
    r.add(five_factor());
    r.add(truncation(Side::psi));
    r.add(truncation(Side::theta));
    r.add(annihilation_w(Side::psi));
    r.add(annihilation_w(Side::theta));
    r.add(near_sum_recovery());
    r.add(cross_annihilation());
    r.add(inverse_polarized_triple());
    return r;
  }

 private:
  AlgElem phi(const FinSeries& f) const { return iso_.image(f); }
  AlgElem psi(const FinSeries& f) const { return dec_.psi.apply(fi_.element(f)); }
  AlgElem theta(const FinSeries& f) const { return dec_.theta.apply(fi_.element(f)); }
  AlgElem ext(Side s, const FinSeries& f) const { return s == Side::psi ? psi(f) : theta(f); }
  const AlgElem& e(std::size_t x) const { return iso_.idempotent(x); }
  Exec exec() const { return opts_.exec; }

  CheckResult jordan_square() {
    return run_check("jordan_square", full_.size(), exec(), [&](std::size_t i, CheckResult& slot) {
      const auto& a = full_[i];
      const AlgElem pa = phi(a);
      expect(slot, {i}, "phi(a^2) = phi(a)^2", phi(a * a), pa * pa);
    });
  }

  CheckResult jordan_aba() {
    return run_check("jordan_aba", full_.size(), exec(), [&](std::size_t i, CheckResult& slot) {
      const auto& a = full_[i];
      const AlgElem pa = phi(a);
      for (std::size_t j = 0; j < full_.size(); ++j) {
        const auto& b = full_[j];
        expect(slot, {i, j}, "phi(aba) = phi(a)phi(b)phi(a)", phi(a * b * a), pa * phi(b) * pa);
      }
    });
  }

  CheckResult polarized_triple() {
    return run_check("polarized_triple", opts_.tuple_samples, exec(), [&](std::size_t s, CheckResult& slot) {
      auto gen = item_rng(opts_.seed, 3, s);
      const auto& a = pick(gen), &b = pick(gen), &c = pick(gen);
      expect(slot, {s}, "phi(abc + cba) = phi(a)phi(b)phi(c) + phi(c)phi(b)phi(a)", phi(a * b * c + c * b * a),
             phi(a) * phi(b) * phi(c) + phi(c) * phi(b) * phi(a));
    });
  }

  CheckResult idempotent_commutation() {
    return run_check("idempotent_commutation", subsets_.size(), exec(), [&](std::size_t s, CheckResult& slot) {
      const auto& y = subsets_[s];
      const FinSeries ey = FinSeries::subset_idempotent(fi_.poset_ptr(), fi_.ring(), y);
      const AlgElem pe = phi(ey);
      std::vector<FinSeries> commuting;
      for (const auto& f : diag_) commuting.push_back(f);
      for (const auto& f : full_) commuting.push_back(restrict(f, [&](auto u, auto v) { return y[u] == y[v]; }));
      for (std::size_t i = 0; i < commuting.size(); ++i) {
        const auto& a = commuting[i];
        const AlgElem pa = phi(a);
        expect(slot, {s, i}, "phi(a)phi(e) = phi(ae)", pa * pe, phi(a * ey));
        expect(slot, {s, i}, "phi(e)phi(a) = phi(ae)", pe * pa, phi(a * ey));
      }
    });
  }

  CheckResult idempotent_annihilation() {
    return run_check("idempotent_annihilation", subsets_.size(), exec(), [&](std::size_t s, CheckResult& slot) {
      const auto& y = subsets_[s];
      const AlgElem pe = iso_.subset_image(y);
      for (std::size_t i = 0; i < full_.size(); ++i) {
        const FinSeries a = restrict(full_[i], [&](auto u, auto v) { return !y[u] && !y[v]; });
        const AlgElem pa = phi(a);
        expect(slot, {s, i}, "phi(e)phi(a) = 0 when ea = ae = 0", pe * pa, zero_);
        expect(slot, {s, i}, "phi(a)phi(e) = 0 when ea = ae = 0", pa * pe, zero_);
      }
    });
  }

  CheckResult coefficient_extraction() {
    return run_check("coefficient_extraction", full_.size(), exec(), [&](std::size_t i, CheckResult& slot) {
      const auto& f = full_[i];
      const AlgElem pf = phi(f);
      for (std::size_t x = 0; x < n_; ++x) {
        expect(slot, {i, x, x}, "f(x,x)phi(e_x) = phi(e_x)phi(f)phi(e_x)", e(x).scaled(f.at(x, x)), e(x) * pf * e(x));
        for (std::size_t y = 0; y < n_; ++y) {
          if (!poset_.less(x, y)) continue;
          expect(slot, {i, x, y}, "f(x,y)phi(e_xy) = phi(e_x)phi(f)phi(e_y) + phi(e_y)phi(f)phi(e_x)",
                 phi(fi_.unit_series(x, y)).scaled(f.at(x, y)), e(x) * pf * e(y) + e(y) * pf * e(x));
        }
      }
    });
  }

  CheckResult equality_criterion() {
    return run_check("equality_criterion", full_.size(), exec(), [&](std::size_t i, CheckResult& slot) {
      auto gen = item_rng(opts_.seed, 7, i);
      const AlgElem a = phi(full_[i]);
      std::vector<AlgElem> others{a};
      for (const auto& g : full_) others.push_back(phi(g));
      std::vector<RingValue> bump = a.coords();
      std::uniform_int_distribution<std::size_t> pick_coord(0, bump.size() - 1);
      bump[pick_coord(gen)] += RingValue::one(fi_.ring());
      others.emplace_back(iso_.codomain(), std::move(bump));
      for (std::size_t j = 0; j < others.size(); ++j) {
        const bool predicate = equal_by_sandwiches(iso_, a, others[j]);
        const bool plain = a == others[j];
        if (predicate == plain)
          slot.record_pass();
        else
          slot.record_failure({{i, j}, predicate ? "sandwiches agree but a != b" : "a = b but sandwiches differ",
                               a.coords(), others[j].coords()});
      }
    });
  }

  CheckResult diagonal_homomorphism() {
    return run_check("diagonal_homomorphism", diag_.size(), exec(), [&](std::size_t i, CheckResult& slot) {
      const auto& f = diag_[i];
      const AlgElem pf = phi(f);
      for (std::size_t j = 0; j < diag_.size(); ++j) {
        const auto& g = diag_[j];
        const AlgElem pg = phi(g);
        const AlgElem pfg = phi(f * g);
        expect(slot, {i, j}, "phi(fg) = phi(f)phi(g) on D", pfg, pf * pg);
        expect(slot, {i, j}, "phi(fg) = phi(g)phi(f) on D", pfg, pg * pf);
      }
    });
  }

  // phi(e_x)phi(f)phi(e_y) = f(x,y) psi(e_xy), mirrored for theta.
  CheckResult unit_coefficient(Side side) {
    const LinMap& m = side == Side::psi ? dec_.psi : dec_.theta;
    const char* name = side == Side::psi ? "psi_coefficient" : "theta_coefficient";
    return run_check(name, full_.size(), exec(), [&, side](std::size_t i, CheckResult& slot) {
      const auto& f = full_[i];
      const AlgElem pf = phi(f);
      for (std::size_t k = 0; k < fi_.dim(); ++k) {
        const auto [x, y] = fi_.pair_at(k);
        const AlgElem lhs = side == Side::psi ? e(x) * pf * e(y) : e(y) * pf * e(x);
        expect(slot, {i, x, y},
               side == Side::psi ? "phi(e_x)phi(f)phi(e_y) = f(x,y)psi(e_xy)" : "phi(e_y)phi(f)phi(e_x) = f(x,y)theta(e_xy)",
               lhs, m.image_of_basis(k).scaled(f.at(x, y)));
      }
    });
  }

  CheckResult sandwich(Side side) {
    const char* name = side == Side::psi ? "psi_sandwich" : "theta_sandwich";
    return run_check(name, strict_.size(), exec(), [&, side](std::size_t i, CheckResult& slot) {
      const auto& f = strict_[i];
      const AlgElem pf = phi(f);
      const AlgElem& ef = side == Side::psi ? psi_strict_[i] : theta_strict_[i];
      for (std::size_t x = 0; x < n_; ++x) {
        expect(slot, {i, x, x}, "phi(e_x)ext(f)phi(e_x) = 0", e(x) * ef * e(x), zero_);
        for (std::size_t y = 0; y < n_; ++y) {
          if (!poset_.less(x, y)) continue;
          if (side == Side::psi) {
            expect(slot, {i, x, y}, "phi(e_x)psi(f)phi(e_y) = phi(e_x)phi(f)phi(e_y)", e(x) * ef * e(y),
                   e(x) * pf * e(y));
            expect(slot, {i, x, y}, "phi(e_y)psi(f)phi(e_x) = 0", e(y) * ef * e(x), zero_);
          } else {
            expect(slot, {i, x, y}, "phi(e_y)theta(f)phi(e_x) = phi(e_y)phi(f)phi(e_x)", e(y) * ef * e(x),
                   e(y) * pf * e(x));
            expect(slot, {i, x, y}, "phi(e_x)theta(f)phi(e_y) = 0", e(x) * ef * e(y), zero_);
          }
        }
      }
    });
  }

  CheckResult extension_on_units() {
    const auto pairs = poset_.strict_pairs();
    return run_check("extension_on_units", pairs.size(), exec(), [&](std::size_t s, CheckResult& slot) {
      const auto [x, y] = pairs[s];
      const FinSeries exy = fi_.unit_series(x, y);
      const AlgElem p = phi(exy);
      expect(slot, {x, y}, "oracle psi(e_xy) = phi(e_x)phi(e_xy)phi(e_y)", extend_via_inverse(iso_, exy, Side::psi),
             e(x) * p * e(y));
      expect(slot, {x, y}, "oracle theta(e_xy) = phi(e_y)phi(e_xy)phi(e_x)",
             extend_via_inverse(iso_, exy, Side::theta), e(y) * p * e(x));
    });
  }

  CheckResult oracle_agreement() {
    return run_check("oracle_agreement", full_.size(), exec(), [&](std::size_t i, CheckResult& slot) {
      const auto& f = full_[i];
      expect(slot, {i}, "phi^{-1} construction = psi(f)", extend_via_inverse(iso_, f, Side::psi), psi(f));
      expect(slot, {i}, "phi^{-1} construction = theta(f)", extend_via_inverse(iso_, f, Side::theta), theta(f));
    });
  }

  // psi(fg) = psi(f)psi(g), theta(fg) = theta(g)theta(f), split by D/FZ case.
  CheckResult multiplicativity(Side side) {
    const char* name = side == Side::psi ? "psi_multiplicative" : "theta_antimultiplicative";
    std::vector<std::pair<const FinSeries*, const FinSeries*>> cases;
    for (std::size_t i = 0; i < full_.size(); ++i)
      for (std::size_t j = 0; j < full_.size(); ++j) {
        cases.emplace_back(&diag_[i], &strict_[j]);
        cases.emplace_back(&strict_[i], &diag_[j]);
        cases.emplace_back(&strict_[i], &strict_[j]);
        cases.emplace_back(&full_[i], &full_[j]);
      }
    return run_check(name, cases.size(), exec(), [&, side](std::size_t s, CheckResult& slot) {
      static constexpr const char* labels[2][4] = {
          {"psi(fg) = psi(f)psi(g), f in D, g in FZ", "psi(fg) = psi(f)psi(g), f in FZ, g in D",
           "psi(fg) = psi(f)psi(g), f, g in FZ", "psi(fg) = psi(f)psi(g)"},
          {"theta(fg) = theta(g)theta(f), f in D, g in FZ", "theta(fg) = theta(g)theta(f), f in FZ, g in D",
           "theta(fg) = theta(g)theta(f), f, g in FZ", "theta(fg) = theta(g)theta(f)"}};
      const auto& f = *cases[s].first;
      const auto& g = *cases[s].second;
      const AlgElem ef = ext(side, f), eg = ext(side, g);
      expect(slot, {s / 4, s % 4}, labels[side == Side::psi ? 0 : 1][s % 4], ext(side, f * g),
             side == Side::psi ? ef * eg : eg * ef);
    });
  }

  CheckResult five_factor() {
    return run_check("five_factor", opts_.tuple_samples, exec(), [&](std::size_t s, CheckResult& slot) {
      auto gen = item_rng(opts_.seed, 5, s);
      const auto& a = pick(gen), &b = pick(gen), &c = pick(gen), &d = pick(gen), &ee = pick(gen);
      const AlgElem pa = phi(a), pb = phi(b), pc = phi(c), pd = phi(d), pe = phi(ee);
      expect(slot, {s}, "phi(abcde + edabc + cbade + edcba) = phi(a)..phi(e) + ...",
             phi(a * b * c * d * ee + ee * d * a * b * c + c * b * a * d * ee + ee * d * c * b * a),
             pa * pb * pc * pd * pe + pe * pd * pa * pb * pc + pc * pb * pa * pd * pe + pe * pd * pc * pb * pa);
    });
  }

  // Sampled W for instance (x, y): the empty set, the whole allowed set, the
  // allowed part of the complement of [x,y], and random allowed subsets.
  std::vector<std::vector<bool>> w_sets(const std::vector<bool>& excluded, std::size_t x, std::size_t y,
                                        std::mt19937_64& gen) const {
    std::vector<std::vector<bool>> out;
    std::vector<bool> all(n_), outside(n_);
    for (std::size_t z = 0; z < n_; ++z) {
      all[z] = !excluded[z];
      outside[z] = !excluded[z] && !(poset_.leq(x, z) && poset_.leq(z, y));
    }
    out.push_back(std::vector<bool>(n_, false));
    out.push_back(all);
    out.push_back(outside);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t s = 0; s < opts_.w_samples; ++s) {
      std::vector<bool> w(n_);
      for (std::size_t z = 0; z < n_; ++z) w[z] = all[z] && coin(gen);
      out.push_back(std::move(w));
    }
    return out;
  }

  // phi(e_x)psi(f)phi(e_W) = phi(e_x)psi(f_{>x})phi(e_W) and
  // phi(e_W)psi(f)phi(e_x) = phi(e_W)psi(f_{<x})phi(e_x); theta swaps > and <.
  CheckResult truncation(Side side) {
    const char* name = side == Side::psi ? "truncation_psi" : "truncation_theta";
    return run_check(name, strict_.size(), exec(), [&, side](std::size_t i, CheckResult& slot) {
      const auto& f = strict_[i];
      const AlgElem ef = ext(side, f);
      auto gen = item_rng(opts_.seed, 11, i, side == Side::psi ? 0 : 1);
      for (std::size_t x = 0; x < n_; ++x) {
        const Truncation left = side == Side::psi ? Truncation::above : Truncation::below;
        const Truncation right = side == Side::psi ? Truncation::below : Truncation::above;
        const AlgElem el = ext(side, truncate(f, x, left));
        const AlgElem er = ext(side, truncate(f, x, right));
        auto ws = w_sets(std::vector<bool>(n_, false), x, x, gen);
        for (const auto& s : subsets_) ws.push_back(s);
        for (std::size_t w = 0; w < ws.size(); ++w) {
          const AlgElem pw = iso_.subset_image(ws[w]);
          expect(slot, {i, x, w}, "phi(e_x)ext(f)phi(e_W) = phi(e_x)ext(f truncated)phi(e_W)", e(x) * ef * pw,
                 e(x) * el * pw);
          expect(slot, {i, x, w}, "phi(e_W)ext(f)phi(e_x) = phi(e_W)ext(f truncated)phi(e_x)", pw * ef * e(x),
                 pw * er * e(x));
        }
      }
    });
  }

  // For strict f, g with ext(f) = phi(f'), ext(g) = phi(g'), all x <= y and W
  // avoiding the z in [x,y] with f'(x,z) != 0 != g'(z,y) (theta: g'(x,z) != 0
  // != f'(z,y)): phi(e_x)ext(f)phi(e_W)ext(g)phi(e_y) = phi(e_y)ext(f)phi(e_W)ext(g)phi(e_x) = 0.
  CheckResult annihilation_w(Side side) {
    const char* name = side == Side::psi ? "annihilation_w_psi" : "annihilation_w_theta";
    const auto& exts = side == Side::psi ? psi_strict_ : theta_strict_;
    std::vector<FinSeries> primes;
    for (const auto& a : exts) primes.push_back(iso_.preimage(a));
    std::vector<std::pair<std::size_t, std::size_t>> instances;
    for (std::size_t i = 0; i < strict_.size(); ++i)
      for (std::size_t j = 0; j < strict_.size(); ++j) instances.emplace_back(i, j);
    return run_check(name, instances.size(), exec(), [&, side](std::size_t s, CheckResult& slot) {
      const auto [i, j] = instances[s];
      const AlgElem& ef = exts[i];
      const AlgElem& eg = exts[j];
      const FinSeries& fp = primes[i];
      const FinSeries& gp = primes[j];
      auto gen = item_rng(opts_.seed, 13, s, side == Side::psi ? 0 : 1);
      for (std::size_t k = 0; k < fi_.dim(); ++k) {
        const auto [x, y] = fi_.pair_at(k);
        std::vector<bool> excluded(n_, false);
        for (std::size_t z : poset_.interval(x, y)) {
          excluded[z] = side == Side::psi ? !fp.at(x, z).is_zero() && !gp.at(z, y).is_zero()
                                          : !gp.at(x, z).is_zero() && !fp.at(z, y).is_zero();
        }
        const AlgElem left_x = e(x) * ef, left_y = e(y) * ef;
        const AlgElem right_y = eg * e(y), right_x = eg * e(x);
        const auto ws = w_sets(excluded, x, y, gen);
        for (std::size_t w = 0; w < ws.size(); ++w) {
          const AlgElem pw = iso_.subset_image(ws[w]);
          expect(slot, {i, j, x, y, w}, "phi(e_x)ext(f)phi(e_W)ext(g)phi(e_y) = 0", left_x * pw * right_y, zero_);
          expect(slot, {i, j, x, y, w}, "phi(e_y)ext(f)phi(e_W)ext(g)phi(e_x) = 0", left_y * pw * right_x, zero_);
        }
      }
    });
  }

  // g + h = f_Z for the two phi^{-1} series, hence phi(f) = psi(f) + theta(f) on FZ.
  CheckResult near_sum_recovery() {
    return run_check("near_sum_recovery", strict_.size(), exec(), [&](std::size_t i, CheckResult& slot) {
      const auto& f = strict_[i];
      expect(slot, {i}, "g + h = f_Z", extension_preimage(iso_, f, Side::psi) + extension_preimage(iso_, f, Side::theta),
             f, fi_);
      expect(slot, {i}, "phi(f) = psi(f) + theta(f) on FZ", phi(f), psi_strict_[i] + theta_strict_[i]);
    });
  }

  CheckResult cross_annihilation() {
    return run_check("cross_annihilation", strict_.size(), exec(), [&](std::size_t i, CheckResult& slot) {
      for (std::size_t j = 0; j < strict_.size(); ++j) {
        expect(slot, {i, j}, "psi(f)theta(f') = 0", psi_strict_[i] * theta_strict_[j], zero_);
        expect(slot, {i, j}, "theta(f')psi(f) = 0", theta_strict_[j] * psi_strict_[i], zero_);
      }
    });
  }

  CheckResult inverse_polarized_triple() {
    return run_check("inverse_polarized_triple", opts_.tuple_samples, exec(), [&](std::size_t s, CheckResult& slot) {
      auto gen = item_rng(opts_.seed, 17, s);
      auto random_element = [&] {
        std::vector<RingValue> c;
        for (std::size_t k = 0; k < iso_.codomain()->dim(); ++k) c.push_back(random_scalar(fi_.ring(), gen));
        return AlgElem(iso_.codomain(), std::move(c));
      };
      const AlgElem a = random_element(), b = random_element(), c = random_element();
      const FinSeries ia = iso_.preimage(a), ib = iso_.preimage(b), ic = iso_.preimage(c);
      expect(slot, {s}, "phi^{-1}(abc + cba) = phi^{-1}(a)phi^{-1}(b)phi^{-1}(c) + ...",
             iso_.preimage(a * b * c + c * b * a), ia * ib * ic + ic * ib * ia, fi_);
    });
  }

  const FinSeries& pick(std::mt19937_64& gen) const {
    const std::size_t total = full_.size() + units_.size();
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, total - 1)(gen);
    return k < full_.size() ? full_[k] : units_[k - full_.size()];
  }

  const JordanIso& iso_;
  const IncidenceAlgebra& fi_;
  const Poset& poset_;
  std::size_t n_;
  IdentityOptions opts_;
  Decomposition dec_;
  AlgElem zero_;
  std::vector<FinSeries> full_, diag_, strict_, units_;
  std::vector<AlgElem> psi_strict_, theta_strict_;
  std::vector<std::vector<bool>> subsets_;
};

}  // namespace

Report verify_identities(const JordanIso& iso, const IdentityOptions& options) {
  return IdentitySuite(iso, options).run();
}

}  // namespace fialg
