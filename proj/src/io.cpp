#include "fialg/io.hpp"

#include <fstream>
#include <sstream>

#include "fialg/error.hpp"

namespace fialg::io {

namespace {

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) parse_error(std::string("expected an object holding \"") + name + "\"");
  auto it = j.find(name);
  if (it == j.end()) parse_error(std::string("missing field \"") + name + "\"");
  return *it;
}

const std::string& as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) parse_error(where + ": expected a string, got " + j.dump());
  return j.get_ref<const std::string&>();
}

std::size_t as_size(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) parse_error(where + ": expected a non-negative integer, got " + j.dump());
  return j.get<std::size_t>();
}

RingValue scalar_from_json(const Json& j, const RingSpec& ring, const std::string& where) {
  if (j.is_number_integer()) return RingValue::from_int(ring, j.get<long>());
  try {
    return RingValue::parse(ring, as_string(j, where));
  } catch (const Error& e) {
    throw Error(e.kind(), where + ": " + e.message());
  }
}

Json scalars(const std::vector<RingValue>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

template <class Fn>
auto with_path(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.message().rfind(path + ":", 0) == 0) throw;
    throw Error(e.kind(), path + ": " + e.message());
  }
}

}  // namespace

Poset poset_from_json(const Json& j) {
  const Json& elems = field(j, "elements");
  if (!elems.is_array()) parse_error("\"elements\" must be an array of strings");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elems.size(); ++i)
    labels.push_back(as_string(elems[i], "elements[" + std::to_string(i) + "]"));
  std::vector<std::pair<std::string, std::string>> rel;
  if (j.contains("relations")) {
    const Json& rs = j["relations"];
    if (!rs.is_array()) parse_error("\"relations\" must be an array of pairs");
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const std::string where = "relations[" + std::to_string(i) + "]";
      if (!rs[i].is_array() || rs[i].size() != 2) parse_error(where + ": expected a pair [a, b]");
      rel.emplace_back(as_string(rs[i][0], where), as_string(rs[i][1], where));
    }
  }
  return Poset::from_relations(std::move(labels), rel);
}

Json to_json(const Poset& p) {
  Json rel = Json::array();
  for (const auto& [a, b] : p.covering_pairs()) rel.push_back({p.label(a), p.label(b)});
  return {{"elements", p.labels()}, {"relations", std::move(rel)}};
}

RingSpec ring_from_text(const std::string& text) {
  if (text == "rationals") return RingSpec::rationals();
  if (text == "integers") return RingSpec::integers();
  std::string digits;
  if (text.rfind("modular:", 0) == 0)
    digits = text.substr(8);
  else if (text.rfind("modular(", 0) == 0 && text.size() > 9 && text.back() == ')')
    digits = text.substr(8, text.size() - 9);
  else
    parse_error("unknown ring \"" + text + "\" (expected rationals, integers or modular:n)");
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 18)
    parse_error("bad modulus in \"" + text + "\"");
  return RingSpec::modular(std::stoll(digits));
}

RingSpec ring_from_json(const Json& j) {
  const Json& r = j.is_object() && j.contains("ring") ? j["ring"] : j;
  if (r.is_string()) return ring_from_text(r.get<std::string>());
  if (r.is_object() && r.size() == 1 && r.contains("modular")) {
    const Json& n = r["modular"];
    if (!n.is_number_integer()) parse_error("\"ring.modular\" must be an integer");
    return RingSpec::modular(n.get<std::int64_t>());
  }
  parse_error("field \"ring\" must be \"rationals\", \"integers\" or {\"modular\": n}");
}

Json to_json(const RingSpec& r) {
  switch (r.kind) {
    case RingKind::integers: return {{"ring", "integers"}};
    case RingKind::rationals: return {{"ring", "rationals"}};
    case RingKind::modular: return {{"ring", {{"modular", r.modulus}}}};
  }
  return {};
}

FinSeries series_from_json(const Json& j, const PosetPtr& poset, const RingSpec& ring) {
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) parse_error("\"entries\" must be an array");
  FinSeries f(poset, ring);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string where = "entries[" + std::to_string(i) + "]";
    const Json& e = entries[i];
    const std::size_t x = poset->index_of(as_string(field(e, "x"), where + ".x"));
    const std::size_t y = poset->index_of(as_string(field(e, "y"), where + ".y"));
    f.add_to(x, y, scalar_from_json(field(e, "value"), ring, where + ".value"));
  }
  return f;
}

Json to_json(const FinSeries& f) {
  Json entries = Json::array();
  for (const auto& [key, v] : f.entries())
    entries.push_back({{"x", f.poset().label(key.first)}, {"y", f.poset().label(key.second)}, {"value", v.to_string()}});
  return {{"entries", std::move(entries)}};
}

LinMap linmap_from_json(const Json& j, const AlgebraPtr& domain, const AlgebraPtr& codomain) {
  const std::size_t d = as_size(field(j, "domain_dim"), "domain_dim");
  const std::size_t d2 = as_size(field(j, "codomain_dim"), "codomain_dim");
  if (d != domain->dim())
    throw Error(ErrorKind::SizeMismatch, "domain_dim is " + std::to_string(d) + " but the algebra has dimension " +
                                             std::to_string(domain->dim()));
  if (d2 != codomain->dim())
    throw Error(ErrorKind::SizeMismatch, "codomain_dim is " + std::to_string(d2) +
                                             " but the algebra has dimension " + std::to_string(codomain->dim()));
  const Json& cols = field(j, "columns");
  if (!cols.is_array() || cols.size() != d)
    throw Error(ErrorKind::SizeMismatch, "\"columns\" must hold domain_dim = " + std::to_string(d) + " columns");
  const RingSpec& ring = domain->ring();
  Matrix m(ring, d2, d);
  for (std::size_t c = 0; c < d; ++c) {
    if (!cols[c].is_array() || cols[c].size() != d2)
      throw Error(ErrorKind::SizeMismatch,
                  "columns[" + std::to_string(c) + "] must hold codomain_dim = " + std::to_string(d2) + " scalars");
    for (std::size_t r = 0; r < d2; ++r)
      m(r, c) = scalar_from_json(cols[c][r], ring, "columns[" + std::to_string(c) + "][" + std::to_string(r) + "]");
  }
  return LinMap(domain, codomain, std::move(m));
}

Json to_json(const LinMap& m) {
  Json cols = Json::array();
  for (std::size_t c = 0; c < m.domain()->dim(); ++c) cols.push_back(scalars(m.column(c)));
  return {{"domain_dim", m.domain()->dim()}, {"codomain_dim", m.codomain()->dim()}, {"columns", std::move(cols)}};
}

Json to_json(const CheckResult& c) {
  Json ws = Json::array();
  for (const auto& w : c.witnesses)
    ws.push_back({{"indices", w.indices}, {"detail", w.detail}, {"lhs", scalars(w.lhs)}, {"rhs", scalars(w.rhs)}});
  return {{"name", c.name},
          {"pass", c.pass},
          {"evaluated", c.evaluated},
          {"failures", c.failures},
          {"witnesses", std::move(ws)}};
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"checks", std::move(checks)}};
}

Json to_json(const Decomposition& d) {
  Json out = to_json(d.report);
  out["psi"] = to_json(d.psi);
  out["theta"] = to_json(d.theta);
  return out;
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    parse_error(path.string() + ": invalid JSON: " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) parse_error(path.string() + ": cannot open for writing");
  out << dump(j);
  if (!out) parse_error(path.string() + ": write failed");
}

Poset load_poset(const std::filesystem::path& path) {
  return with_path(path.string(), [&] { return poset_from_json(read_file(path)); });
}

RingSpec load_ring(const std::string& path_or_name) {
  if (!std::filesystem::exists(path_or_name)) return ring_from_text(path_or_name);
  return with_path(path_or_name, [&] { return ring_from_json(read_file(path_or_name)); });
}

LinMap load_linmap(const std::filesystem::path& path, const AlgebraPtr& domain, const AlgebraPtr& codomain) {
  return with_path(path.string(), [&] { return linmap_from_json(read_file(path), domain, codomain); });
}

}  // namespace fialg::io
