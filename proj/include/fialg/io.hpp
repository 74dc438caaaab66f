#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "fialg/jordan.hpp"
#include "fialg/linmap.hpp"
#include "fialg/poset.hpp"
#include "fialg/report.hpp"
#include "fialg/ring.hpp"
#include "fialg/series.hpp"

namespace fialg::io {

using Json = nlohmann::json;  // object keys come out sorted

// {"elements": [...], "relations": [[a, b], ...]}; written with covering pairs.
Poset poset_from_json(const Json& j);
Json to_json(const Poset& p);

// {"ring": "rationals" | "integers" | {"modular": n}}, or the bare value.
RingSpec ring_from_json(const Json& j);
// "rationals", "integers", "modular:9" or "modular(9)".
RingSpec ring_from_text(const std::string& text);
Json to_json(const RingSpec& r);

// {"entries": [{"x": "1", "y": "2", "value": "5/6"}, ...]}
FinSeries series_from_json(const Json& j, const PosetPtr& poset, const RingSpec& ring);
Json to_json(const FinSeries& f);

// {"domain_dim": d, "codomain_dim": d2, "columns": [[...], ...]}
LinMap linmap_from_json(const Json& j, const AlgebraPtr& domain, const AlgebraPtr& codomain);
Json to_json(const LinMap& m);

Json to_json(const CheckResult& c);
Json to_json(const Report& r);
Json to_json(const Decomposition& d);  // report plus "psi" and "theta"

Json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const Json& j);
std::string dump(const Json& j);  // canonical text, trailing newline

// File loaders: errors are rethrown with the path prepended.
Poset load_poset(const std::filesystem::path& path);
RingSpec load_ring(const std::string& path_or_name);
LinMap load_linmap(const std::filesystem::path& path, const AlgebraPtr& domain, const AlgebraPtr& codomain);

}  // namespace fialg::io
