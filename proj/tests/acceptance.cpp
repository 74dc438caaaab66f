// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic
// throughout. Exit status is 0 only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fialg/error.hpp"
#include "fialg/identities.hpp"
#include "fialg/io.hpp"
#include "fialg/jordan.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace fialg;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

struct Named {
  std::string name;
  PosetPtr poset;
};

std::vector<Named> base_posets() {
  return {{"singleton", fixtures::chain(1)},  {"2-chain", fixtures::chain(2)},         {"3-chain", fixtures::chain(3)},
          {"diamond", fixtures::diamond()},   {"2-antichain", fixtures::antichain(2)}, {"two 2-chains", fixtures::two_chains()}};
}

std::string where(const Named& p, const RingSpec& r, std::uint64_t seed) {
  return p.name + " over " + r.name() + ", seed " + std::to_string(seed);
}

// Criterion 1 and 7 share this corpus.
struct CorpusEntry {
  std::string label;
  std::shared_ptr<JordanIso> iso;
  Decomposition dec;
};

std::vector<CorpusEntry> build_corpus(Outcome& c1, double& seconds) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Named> posets = base_posets();
  for (std::uint64_t s = 0; s < 25; ++s)
    posets.push_back({"random6#" + std::to_string(s), fixtures::share(random_poset(6, 1, 2, s))});
  std::vector<CorpusEntry> out;
  std::size_t idx = 0;
  for (const auto& p : posets)
    for (const auto& ring : fixtures::rings()) {
      const std::uint64_t seed = 1000 + idx++;
      const std::string label = where(p, ring, seed);
      try {
        const auto fi = to_struct_algebra(p.poset, ring);
        auto iso = std::make_shared<JordanIso>(fi, random_jordan_iso(*fi, seed, {.rebase_codomain = true}));
        Decomposition d = decompose(*iso);
        if (d.report.checks.size() != 5) c1.fail(label + ": expected five checks");
        for (const auto& c : d.report.checks)
          if (!c.pass) c1.fail(label + ": " + c.name + " fails");
        out.push_back({label, iso, std::move(d)});
      } catch (const Error& e) {
        c1.fail(label + ": " + e.what());
      }
    }
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds > 60) c1.fail("took " + std::to_string(seconds) + " s");
  return out;
}

Outcome oracle_equivalence(std::size_t& compared) {
  Outcome o;
  std::vector<Named> posets = base_posets();
  for (std::uint64_t s = 0; s < 3; ++s)
    posets.push_back({"random5#" + std::to_string(s), fixtures::share(random_poset(5, 1, 2, 40 + s))});
  std::uint64_t seed = 0;
  for (const auto& p : posets)
    for (const auto& ring : fixtures::rings()) {
      const auto fi = to_struct_algebra(p.poset, ring);
      const JordanIso iso(fi, random_jordan_iso(*fi, ++seed, {.rebase_codomain = true}));
      const Decomposition d = decompose(iso);
      std::mt19937_64 gen(seed);
      for (int i = 0; i < 100; ++i) {
        const FinSeries f = random_series(p.poset, ring, gen);
        const AlgElem a = fi->element(f);
        if (extend_via_inverse(iso, f, Side::psi) != d.psi.apply(a)) o.fail(where(p, ring, seed) + ": psi mismatch");
        if (extend_via_inverse(iso, f, Side::theta) != d.theta.apply(a))
          o.fail(where(p, ring, seed) + ": theta mismatch");
        compared += 2;
      }
    }
  return o;
}

// Adds one to entry (r, c), moving on until the result stays invertible.
std::optional<LinMap> bump_invertible(const LinMap& m, std::mt19937_64& gen) {
  const std::size_t d = m.domain()->dim();
  for (int attempt = 0; attempt < 50; ++attempt) {
    const std::size_t r = gen() % d, c = gen() % d;
    LinMap bad = m.with_entry(r, c, m.matrix()(r, c) + RingValue::one(m.ring()));
    if (try_invert(bad)) return bad;
  }
  return std::nullopt;
}

Outcome identity_suite(std::size_t& maps, std::size_t& evaluated) {
  Outcome o;
  std::vector<Named> posets = base_posets();
  for (std::uint64_t s = 0; s < 3; ++s)
    posets.push_back({"random6#" + std::to_string(s), fixtures::share(random_poset(6, 1, 2, 70 + s))});
  std::uint64_t seed = 0;
  for (const auto& p : posets)
    for (const auto& ring : fixtures::rings()) {
      ++seed;
      const auto fi = to_struct_algebra(p.poset, ring);
      const JordanIso iso(fi, random_jordan_iso(*fi, seed, {.rebase_codomain = true}));
      const Report r = verify_identities(iso, {.seed = seed});
      ++maps;
      for (const auto& c : r.checks) {
        evaluated += c.evaluated;
        if (!c.pass) o.fail(where(p, ring, seed) + ": " + c.name + " fails");
      }
      if (p.poset->size() < 2) continue;
      std::mt19937_64 gen(seed);
      const auto bad = bump_invertible(iso.phi(), gen);
      if (!bad) {
        o.fail(where(p, ring, seed) + ": no invertible corruption found");
        continue;
      }
      const JordanIso corrupted(fi, *bad, {.require_jordan = false});
      const Report rb = verify_identities(corrupted, {.seed = seed});
      bool reported = false;
      for (const auto& c : rb.checks) reported = reported || (!c.pass && !c.witnesses.empty());
      if (!reported) o.fail(where(p, ring, seed) + ": corrupted map passes every identity");
    }
  return o;
}

// All partial orders on {0..n-1}, by brute force over relation sets.
std::vector<PosetPtr> all_labeled_posets(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  std::vector<PosetPtr> out;
  for (std::uint64_t bits = 0; bits < (1ULL << slots.size()); ++bits) {
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if ((bits >> k) & 1U) rel.push_back(slots[k]);
    const auto reach = oracle::closure(n, rel);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        if (i != j) {
          const bool in = std::find(rel.begin(), rel.end(), std::make_pair(i, j)) != rel.end();
          ok = reach[i][j] == in && !(reach[i][j] && reach[j][i]);
        }
    if (ok) out.push_back(fixtures::share(Poset::from_index_relations(labels, rel)));
  }
  return out;
}

Outcome algebra_kernel(std::size_t& posets_checked, std::size_t& triples) {
  Outcome o;
  const RingSpec q = RingSpec::rationals();
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : all_labeled_posets(n)) {
      ++posets_checked;
      const auto fi = to_struct_algebra(p, q);
      const std::size_t d = fi->dim();
      std::vector<FinSeries> units;
      for (std::size_t i = 0; i < d; ++i) units.push_back(fi->unit_series(fi->pair_at(i).first, fi->pair_at(i).second));
      const FinSeries delta = FinSeries::delta(p, q);
      for (std::size_t i = 0; i < d; ++i) {
        if (delta * units[i] != units[i] || units[i] * delta != units[i]) o.fail("delta is not an identity");
        for (std::size_t j = 0; j < d; ++j) {
          const auto [x, y] = fi->pair_at(i);
          const auto [u, v] = fi->pair_at(j);
          const FinSeries expect = y == u ? fi->unit_series(x, v) : FinSeries(p, q);
          const FinSeries prod = units[i] * units[j];
          if (prod != expect) o.fail("e_xy e_uv rule fails");
          if (fi->element(prod) != fi->element(units[i]) * fi->element(units[j])) o.fail("structure constants disagree");
          for (std::size_t k = 0; k < d; ++k) {
            ++triples;
            if ((prod * units[k]) != (units[i] * (units[j] * units[k]))) o.fail("associativity fails");
          }
        }
      }
      for (std::uint64_t y = 0; y < (1ULL << n); ++y)
        for (std::uint64_t z = 0; z < (1ULL << n); ++z) {
          auto mask = [n](std::uint64_t b) {
            std::vector<bool> m(n);
            for (std::size_t i = 0; i < n; ++i) m[i] = (b >> i) & 1U;
            return m;
          };
          if (FinSeries::subset_idempotent(p, q, mask(y)) * FinSeries::subset_idempotent(p, q, mask(z)) !=
              FinSeries::subset_idempotent(p, q, mask(y & z)))
            o.fail("e_Y e_Z != e_(Y cap Z)");
        }
    }
  std::mt19937_64 gen(8);
  for (std::uint64_t s = 0; s < 4; ++s) {
    const auto p = fixtures::share(random_poset(8, 1, 3, s));
    for (const auto& ring : fixtures::rings()) {
      const auto fi = to_struct_algebra(p, ring);
      const std::size_t d = fi->dim();
      const FinSeries delta = FinSeries::delta(p, ring);
      for (int t = 0; t < 1000 / 12 + 1; ++t) {
        auto unit = [&] {
          const auto [x, y] = fi->pair_at(gen() % d);
          return fi->unit_series(x, y).scaled(random_unit(ring, gen));
        };
        const FinSeries a = unit(), b = unit(), c = unit();
        ++triples;
        if ((a * b) * c != a * (b * c)) o.fail("associativity fails on |X| = 8");
        if (delta * a != a || a * delta != a) o.fail("delta is not an identity on |X| = 8");
        if (oracle::dense((a * b) * c) != oracle::dense(a) * oracle::dense(b) * oracle::dense(c))
          o.fail("convolution disagrees with the dense product on |X| = 8");
      }
    }
  }
  return o;
}

Outcome recognizer_soundness(std::size_t& accepted, std::size_t& mutations) {
  Outcome o;
  struct Source {
    std::string label;
    IncidencePtr fi;
    LinMap map;
    int kind;  // 0 hom, 1 anti, 2 Jordan only
  };
  std::vector<Source> sources;
  std::uint64_t seed = 0;
  for (const auto& p : base_posets())
    for (const auto& ring : fixtures::rings()) {
      const auto fi = to_struct_algebra(p.poset, ring);
      for (bool rev : {false, true})
        for (const auto& om : order_isomorphisms(p.poset, p.poset, rev))
          sources.push_back({p.name + (rev ? " anti" : " auto"), fi, from_order_map(om, *fi, *fi), rev ? 1 : 0});
      sources.push_back({p.name + " generated", fi, random_jordan_iso(*fi, ++seed), 2});
    }
  for (const auto& s : sources) {
    const bool jordan = check_jordan(s.map).pass;
    const bool flag = s.kind == 2 || check_homomorphism(s.map, s.kind == 1).pass;
    if (!jordan || !flag) o.fail(s.label + ": generator-built map rejected");
    ++accepted;
  }
  // Mutation corpus: single-entry perturbations of maps with nontrivial strict
  // part; a perturbation the dense oracle still finds Jordan is skipped.
  std::mt19937_64 gen(2024);
  std::size_t skipped = 0;
  while (mutations < 20) {
    const Source& s = sources[gen() % sources.size()];
    if (s.fi->dim() < 2) continue;
    const std::size_t d = s.fi->dim();
    const std::size_t r = gen() % d, c = gen() % d;
    const LinMap bad = s.map.with_entry(r, c, s.map.matrix()(r, c) + RingValue::one(s.map.ring()));
    if (oracle::jordan_pair_failures(*s.fi, bad).empty()) {
      ++skipped;
      continue;
    }
    ++mutations;
    const CheckResult j = check_jordan(bad);
    if (j.pass || j.witnesses.empty()) o.fail(s.label + ": mutation at (" + std::to_string(r) + ", " + std::to_string(c) + ") accepted");
    if (s.kind < 2) {
      const CheckResult h = check_homomorphism(bad, s.kind == 1);
      if (h.pass || h.witnesses.empty()) o.fail(s.label + ": mutated map passes the homomorphism check");
    }
  }
  if (skipped > 0) o.note += (o.note.empty() ? "" : "; ") + std::to_string(skipped) + " still-Jordan perturbations skipped";
  return o;
}

int run_cli(const std::string& args, const fs::path& out, const fs::path& err) {
  const std::string cmd = std::string("\"") + FIALG_CLI_PATH + "\" " + args + " > \"" + out.string() + "\" 2> \"" +
                          err.string() + "\"";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome ring_gate() {
  Outcome o;
  for (long n = 2; n <= 50; ++n)
    if (is_two_torsionfree(RingSpec::modular(n)) != oracle::two_torsionfree_scan(n))
      o.fail("is_two_torsionfree(modular " + std::to_string(n) + ") disagrees with the residue scan");
  const auto fi = to_struct_algebra(fixtures::chain(2), RingSpec::modular(6));
  try {
    decompose(JordanIso(fi, LinMap::identity(fi->algebra())));
    o.fail("decompose over modular(6) succeeded");
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TorsionRefused) o.fail(std::string("wrong error: ") + e.what());
  }
  const fs::path dir = fs::temp_directory_path();
  const std::string fx = FIALG_FIXTURES;
  const int code = run_cli("decompose --poset " + fx + "/chain2.json --ring " + fx + "/ring_mod6.json --map " + fx +
                               "/identity_chain2.json",
                           dir / "fialg_gate.out", dir / "fialg_gate.err");
  if (code != 2 || slurp(dir / "fialg_gate.err").find("TorsionRefused") == std::string::npos)
    o.fail("CLI decompose over modular(6) did not exit 2 with TorsionRefused");
  return o;
}

Outcome recomposition(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  for (const auto& e : corpus)
    if (near_sum_build(e.dec.psi, e.dec.theta, e.dec.split) != e.iso->phi()) o.fail(e.label + ": recomposition differs");
  if (corpus.empty()) o.fail("empty corpus");
  return o;
}

Outcome cli_determinism(std::size_t& runs) {
  Outcome o;
  const std::string fx = FIALG_FIXTURES;
  auto f = [&](const std::string& name) { return "\"" + fx + "/" + name + "\""; };
  auto ctx = [&](const std::string& poset, const std::string& ring, const std::string& map) {
    return " --poset " + f(poset) + " --ring " + f(ring) + " --map " + f(map);
  };
  const std::vector<std::pair<std::string, int>> cases = {
      {"validate-poset " + f("singleton.json"), 0},
      {"validate-poset " + f("chain2.json"), 0},
      {"validate-poset " + f("chain3.json"), 0},
      {"validate-poset " + f("diamond.json"), 0},
      {"validate-poset " + f("antichain2.json"), 0},
      {"validate-poset " + f("two_chains.json"), 0},
      {"validate-poset " + f("cycle.json"), 2},
      {"gen-poset --n 6 --p 1/2 --seed 3", 0},
      {"gen-jordan --poset " + f("diamond.json") + " --ring " + f("ring_mod9.json") + " --seed 5", 0},
      {"gen-jordan --poset " + f("two_chains.json") + " --ring " + f("ring_rationals.json") + " --seed 2", 0},
      {"check-map --jordan" + ctx("chain2.json", "ring_rationals.json", "identity_chain2.json"), 0},
      {"check-map --jordan" + ctx("chain2.json", "ring_rationals.json", "perturbed_chain2.json"), 1},
      {"check-map --anti" + ctx("chain2.json", "ring_integers.json", "reversal_chain2.json"), 0},
      {"check-map" + ctx("chain2.json", "ring_integers.json", "reversal_chain2.json"), 1},
      {"check-map --jordan" + ctx("two_chains.json", "ring_mod9.json", "mixed_two_chains.json"), 0},
      {"check-map --jordan" + ctx("chain2.json", "ring_mod6.json", "identity_chain2.json"), 2},
      {"decompose" + ctx("chain2.json", "ring_rationals.json", "identity_chain2.json"), 0},
      {"decompose" + ctx("chain3.json", "ring_integers.json", "identity_chain3.json"), 0},
      {"decompose" + ctx("chain2.json", "ring_mod9.json", "reversal_chain2.json"), 0},
      {"decompose" + ctx("two_chains.json", "ring_rationals.json", "mixed_two_chains.json"), 0},
      {"decompose" + ctx("chain2.json", "ring_rationals.json", "perturbed_chain2.json"), 2},
      {"decompose" + ctx("chain2.json", "ring_integers.json", "zero_chain2.json"), 2},
      {"decompose" + ctx("chain2.json", "ring_rationals.json", "short_chain2.json"), 2},
      {"decompose" + ctx("chain2.json", "ring_mod6.json", "identity_chain2.json"), 2},
      {"verify --identities --seed 3" + ctx("chain3.json", "ring_rationals.json", "identity_chain3.json"), 0},
      {"verify --identities --seed 3" + ctx("two_chains.json", "ring_mod9.json", "mixed_two_chains.json"), 0},
      {"verify --identities --seed 3" + ctx("chain2.json", "ring_rationals.json", "perturbed_chain2.json"), 1},
      {"verify --identities" + ctx("chain3.json", "ring_mod6.json", "identity_chain3.json"), 2},
  };
  const fs::path dir = fs::temp_directory_path();
  for (const auto& [args, expected] : cases) {
    const int a = run_cli(args, dir / "fialg_det_a.out", dir / "fialg_det_a.err");
    const int b = run_cli(args, dir / "fialg_det_b.out", dir / "fialg_det_b.err");
    runs += 2;
    if (a != expected || b != expected)
      o.fail("`" + args + "` exited " + std::to_string(a) + "/" + std::to_string(b) + ", expected " +
             std::to_string(expected));
    if (slurp(dir / "fialg_det_a.out") != slurp(dir / "fialg_det_b.out") ||
        slurp(dir / "fialg_det_a.err") != slurp(dir / "fialg_det_b.err"))
      o.fail("`" + args + "` output differs between runs");
  }
  return o;
}

int report(int id, const std::string& title, const Outcome& o, const std::string& stats) {
  std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " (" << stats << ")";
  if (!o.note.empty()) std::cout << " -- " << o.note;
  std::cout << std::endl;
  return o.pass ? 0 : 1;
}

}  // namespace

int main() {
  configure_threads_from_env();
  int failed = 0;

  Outcome c1;
  double seconds = 0;
  const auto corpus = build_corpus(c1, seconds);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s", seconds);
  failed += report(1, "near-sum decomposition suite", c1,
                   std::to_string(corpus.size()) + " decompositions, five checks each, " + buf);

  std::size_t compared = 0;
  const Outcome c2 = oracle_equivalence(compared);
  failed += report(2, "oracle equivalence", c2, std::to_string(compared) + " series compared");

  std::size_t maps = 0, evaluated = 0;
  const Outcome c3 = identity_suite(maps, evaluated);
  failed += report(3, "identity suite", c3,
                   std::to_string(maps) + " maps, " + std::to_string(evaluated) + " identity instances, corrupted maps caught");

  std::size_t posets = 0, triples = 0;
  const Outcome c4 = algebra_kernel(posets, triples);
  failed += report(4, "algebra kernel", c4,
                   std::to_string(posets) + " labeled posets with |X| <= 4, " + std::to_string(triples) + " triples");

  std::size_t accepted = 0, mutations = 0;
  const Outcome c5 = recognizer_soundness(accepted, mutations);
  failed += report(5, "recognizer soundness", c5,
                   std::to_string(accepted) + " maps accepted, " + std::to_string(mutations) + " mutations rejected");

  const Outcome c6 = ring_gate();
  failed += report(6, "ring gate", c6, "n = 2..50, modular(6) refused");

  const Outcome c7 = recomposition(corpus);
  failed += report(7, "recomposition", c7, std::to_string(corpus.size()) + " decompositions");

  std::size_t runs = 0;
  const Outcome c8 = cli_determinism(runs);
  failed += report(8, "CLI determinism", c8, std::to_string(runs) + " runs");

  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
