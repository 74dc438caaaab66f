#include "fialg/cli.hpp"

#include <gmpxx.h>

#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "fialg/error.hpp"
#include "fialg/identities.hpp"
#include "fialg/io.hpp"
#include "fialg/jordan.hpp"

namespace fialg::cli {

namespace {

struct Job {
  std::string poset_file;
  std::string ring = "rationals";
  std::string map_file;
  std::string out_file;
  std::uint64_t seed = 1;
  std::size_t n = 0;
  std::string p = "1/2";
  bool anti = false;
  bool jordan = false;
  bool identities = false;
  bool allow_torsion = false;
};

void emit(const Job& job, const io::Json& j, std::ostream& out) {
  if (job.out_file.empty())
    out << io::dump(j);
  else
    io::write_file(job.out_file, j);
}

void summarize(const std::string& command, const Report& r, std::ostream& err) {
  std::size_t passed = 0;
  for (const auto& c : r.checks) passed += c.pass;
  err << command << ": " << passed << "/" << r.checks.size() << " checks pass\n";
  for (const auto& c : r.checks) {
    if (c.pass) continue;
    err << "  FAIL " << c.name << " (" << c.failures << " of " << c.evaluated << ")";
    if (!c.witnesses.empty()) err << ": " << c.witnesses.front().detail;
    err << "\n";
  }
}

// "a/b" or a decimal in [0, 1].
std::pair<std::uint64_t, std::uint64_t> parse_probability(const std::string& text) {
  mpq_class q;
  const auto dot = text.find('.');
  try {
    if (dot == std::string::npos) {
      q = mpq_class(text);
    } else {
      const std::string frac = text.substr(dot + 1);
      const std::string whole = text.substr(0, dot);
      const std::string digits = (whole.empty() ? "0" : whole) + frac;
      q = mpq_class(mpz_class(digits), mpz_class("1" + std::string(frac.size(), '0')));
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::ParseError, "--p: cannot parse \"" + text + "\"");
  }
  q.canonicalize();
  if (sgn(q) < 0 || q > 1 || !q.get_den().fits_ulong_p())
    throw Error(ErrorKind::ParseError, "--p must be a probability in [0, 1], got \"" + text + "\"");
  return {q.get_num().get_ui(), q.get_den().get_ui()};
}

struct Loaded {
  PosetPtr poset;
  RingSpec ring;
  IncidencePtr fi;
};

Loaded load_context(const Job& job) {
  Loaded l{std::make_shared<const Poset>(io::load_poset(job.poset_file)), io::load_ring(job.ring), nullptr};
  l.fi = to_struct_algebra(l.poset, l.ring);
  return l;
}

int validate_poset(const Job& job, std::ostream& out, std::ostream& err) {
  const Poset p = io::load_poset(job.poset_file);
  io::Json j = io::to_json(p);
  j["size"] = p.size();
  j["strict_pairs"] = p.strict_pairs().size();
  j["components"] = p.components().size();
  emit(job, j, out);
  err << "validate-poset: " << p.size() << " elements, " << p.strict_pairs().size() << " strict pairs\n";
  return ok;
}

int gen_poset(const Job& job, std::ostream& out, std::ostream& err) {
  const auto [num, den] = parse_probability(job.p);
  const Poset p = random_poset(job.n, num, den, job.seed);
  emit(job, io::to_json(p), out);
  err << "gen-poset: " << p.size() << " elements, " << p.strict_pairs().size() << " strict pairs\n";
  return ok;
}

int gen_jordan(const Job& job, std::ostream& out, std::ostream& err) {
  const Loaded l = load_context(job);
  const LinMap phi = random_jordan_iso(*l.fi, job.seed, {.allow_torsion = job.allow_torsion});
  emit(job, io::to_json(phi), out);
  err << "gen-jordan: map of dimension " << l.fi->dim() << " over " << l.ring.name() << "\n";
  return ok;
}

int check_map(const Job& job, std::ostream& out, std::ostream& err) {
  const Loaded l = load_context(job);
  const LinMap m = io::load_linmap(job.map_file, l.fi->algebra(), l.fi->algebra());
  const CheckOptions opts{.allow_torsion = job.allow_torsion};
  Report r;
  r.add(job.jordan ? check_jordan(m, opts) : check_homomorphism(m, job.anti, opts));
  emit(job, io::to_json(r), out);
  summarize("check-map", r, err);
  return r.all_pass() ? ok : checks_failed;
}

int decompose_map(const Job& job, std::ostream& out, std::ostream& err) {
  const Loaded l = load_context(job);
  const LinMap m = io::load_linmap(job.map_file, l.fi->algebra(), l.fi->algebra());
  const JordanIso iso(l.fi, m, {.allow_torsion = job.allow_torsion});
  const Decomposition d = decompose(iso);
  emit(job, io::to_json(d), out);
  summarize("decompose", d.report, err);
  return d.report.all_pass() ? ok : checks_failed;
}

int verify(const Job& job, std::ostream& out, std::ostream& err) {
  const Loaded l = load_context(job);
  const LinMap m = io::load_linmap(job.map_file, l.fi->algebra(), l.fi->algebra());
  const JordanIso iso(l.fi, m, {.allow_torsion = job.allow_torsion, .require_jordan = false});
  Report r;
  r.add(iso.jordan_check());
  if (iso.jordan_check().pass) r.append(decompose(iso).report);
  if (job.identities) r.append(verify_identities(iso, {.seed = job.seed}));
  emit(job, io::to_json(r), out);
  summarize("verify", r, err);
  return r.all_pass() ? ok : checks_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  configure_threads_from_env();
  Job job;
  CLI::App app{"Exact incidence-algebra toolkit: Jordan isomorphisms and their near-sum decomposition", "fialg"};
  app.require_subcommand(1);

  auto add_context = [&](CLI::App* sub, bool with_map) {
    sub->add_option("--poset", job.poset_file, "poset JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--ring", job.ring, "ring JSON file, or rationals | integers | modular:n")->required();
    if (with_map) sub->add_option("--map", job.map_file, "linear map JSON file")->required()->check(CLI::ExistingFile);
    sub->add_flag("--allow-torsion", job.allow_torsion, "proceed over rings with 2-torsion");
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", job.out_file, "write the JSON report here"); };

  auto* vp = app.add_subcommand("validate-poset", "load a poset file and print its normal form");
  vp->add_option("file", job.poset_file, "poset JSON file")->required()->check(CLI::ExistingFile);
  add_out(vp);

  auto* gp = app.add_subcommand("gen-poset", "random poset on 1 < ... < n");
  gp->add_option("--n", job.n, "number of elements")->required();
  gp->add_option("--p", job.p, "edge probability, a/b or decimal")->required();
  gp->add_option("--seed", job.seed, "random seed")->required();
  add_out(gp);

  auto* gj = app.add_subcommand("gen-jordan", "random Jordan automorphism of FI(X,R)");
  add_context(gj, false);
  gj->add_option("--seed", job.seed, "random seed")->required();
  add_out(gj);

  auto* cm = app.add_subcommand("check-map", "check a map for (anti-)multiplicativity or the Jordan identities");
  add_context(cm, true);
  auto* anti = cm->add_flag("--anti", job.anti, "check anti-multiplicativity");
  cm->add_flag("--jordan", job.jordan, "check the Jordan identities")->excludes(anti);
  add_out(cm);

  auto* dc = app.add_subcommand("decompose", "split a Jordan isomorphism into psi + theta");
  add_context(dc, true);
  add_out(dc);

  auto* vf = app.add_subcommand("verify", "Jordan check, decomposition checks and optionally the identity suite");
  add_context(vf, true);
  vf->add_flag("--identities", job.identities, "also evaluate the identity suite");
  vf->add_option("--seed", job.seed, "seed for the sampled series (default 1)");
  add_out(vf);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "fialg: " << e.what() << "\n";
    return input_error;
  }

  try {
    if (vp->parsed()) return validate_poset(job, out, err);
    if (gp->parsed()) return gen_poset(job, out, err);
    if (gj->parsed()) return gen_jordan(job, out, err);
    if (cm->parsed()) return check_map(job, out, err);
    if (dc->parsed()) return decompose_map(job, out, err);
    return verify(job, out, err);
  } catch (const Error& e) {
    err << "fialg: error: " << e.what() << "\n";
    return input_error;
  } catch (const std::exception& e) {
    err << "fialg: error: " << e.what() << "\n";
    return input_error;
  }
}

}  // namespace fialg::cli
