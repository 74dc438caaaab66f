#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fialg/poset.hpp"
#include "fialg/ring.hpp"

namespace fixtures {

inline fialg::PosetPtr share(fialg::Poset p) { return std::make_shared<const fialg::Poset>(std::move(p)); }

inline fialg::PosetPtr chain(std::size_t n) { return share(fialg::Poset::chain(n)); }
inline fialg::PosetPtr antichain(std::size_t n) { return share(fialg::Poset::antichain(n)); }

inline fialg::PosetPtr diamond() {
  return share(fialg::Poset::from_relations({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}));
}

inline fialg::PosetPtr two_chains() {
  return share(fialg::Poset::from_relations({"1", "2", "3", "4"}, {{"1", "2"}, {"3", "4"}}));
}

inline std::vector<fialg::RingSpec> rings() {
  return {fialg::RingSpec::rationals(), fialg::RingSpec::modular(9), fialg::RingSpec::integers()};
}

}  // namespace fixtures
