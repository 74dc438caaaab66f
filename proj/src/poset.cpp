#include "fialg/poset.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

#include "fialg/error.hpp"

namespace fialg {

namespace {

std::vector<unsigned char> close_relation(std::size_t n,
                                          const std::vector<std::pair<std::size_t, std::size_t>>& relations) {
  std::vector<unsigned char> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (auto [x, y] : relations) leq[x * n + y] = 1;
  // Warshall
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (leq[k * n + j]) leq[i * n + j] = 1;
    }
  return leq;
}

}  // namespace

Poset Poset::from_index_relations(std::vector<std::string> elements,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& relations) {
  const std::size_t n = elements.size();
  {
    std::vector<std::string> sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw Error(ErrorKind::DuplicateElement, "element '" + *dup + "' listed twice");
  }
  for (auto [x, y] : relations)
    if (x >= n || y >= n) throw Error(ErrorKind::UnknownElement, "relation references index out of range");
  auto leq = close_relation(n, relations);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq[i * n + j] && leq[j * n + i])
        throw Error(ErrorKind::AntisymmetryViolation,
                    "relations imply " + elements[i] + " <= " + elements[j] + " and " + elements[j] + " <= " +
                        elements[i]);
  return Poset(std::move(elements), std::move(leq));
}

Poset Poset::from_relations(std::vector<std::string> elements,
                            const std::vector<std::pair<std::string, std::string>>& relations) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!index.emplace(elements[i], i).second)
      throw Error(ErrorKind::DuplicateElement, "element '" + elements[i] + "' listed twice");
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(relations.size());
  for (const auto& [a, b] : relations) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw Error(ErrorKind::UnknownElement, "relation references unknown element '" + a + "'");
    if (ib == index.end()) throw Error(ErrorKind::UnknownElement, "relation references unknown element '" + b + "'");
    pairs.emplace_back(ia->second, ib->second);
  }
  return from_index_relations(std::move(elements), pairs);
}

Poset Poset::chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i + 1));
    if (i > 0) rel.emplace_back(i - 1, i);
  }
  return from_index_relations(std::move(labels), rel);
}

Poset Poset::antichain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  return from_index_relations(std::move(labels), {});
}

std::size_t Poset::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorKind::UnknownElement, "unknown element '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::size_t> Poset::interval(std::size_t x, std::size_t y) const {
  if (x >= size() || y >= size()) throw Error(ErrorKind::UnknownElement, "interval endpoint out of range");
  std::vector<std::size_t> out;
  if (!leq(x, y)) return out;
  for (std::size_t z = 0; z < size(); ++z)
    if (leq(x, z) && leq(z, y)) out.push_back(z);
  return out;
}

std::vector<std::string> Poset::interval(const std::string& x, const std::string& y) const {
  std::vector<std::string> out;
  for (std::size_t z : interval(index_of(x), index_of(y))) out.push_back(labels_[z]);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::strict_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = 0; y < size(); ++y)
      if (less(x, y)) out.emplace_back(x, y);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covering_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto [x, y] : strict_pairs()) {
    bool covered = true;
    for (std::size_t z = 0; z < size() && covered; ++z)
      if (less(x, z) && less(z, y)) covered = false;
    if (covered) out.emplace_back(x, y);
  }
  return out;
}

std::vector<std::size_t> Poset::linear_extension() const {
  // Sorting by the number of elements below is a valid linear extension:
  // x < y forces the down-set of x to be a proper subset of that of y.
  std::vector<std::size_t> below(size(), 0);
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t z = 0; z < size(); ++z)
      if (leq(z, x)) ++below[x];
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  return order;
}

std::vector<std::vector<std::size_t>> Poset::components() const {
  std::vector<std::size_t> comp(size(), size());
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < size(); ++s) {
    if (comp[s] != size()) continue;
    const std::size_t id = out.size();
    std::vector<std::size_t> stack{s};
    comp[s] = id;
    std::vector<std::size_t> members;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (std::size_t w = 0; w < size(); ++w)
        if (comp[w] == size() && comparable(v, w)) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

Poset Poset::induced(const std::vector<std::size_t>& members) const {
  const std::size_t m = members.size();
  std::vector<std::string> labels;
  std::vector<unsigned char> leq(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(label(members[i]));
    for (std::size_t j = 0; j < m; ++j) leq[i * m + j] = this->leq(members[i], members[j]) ? 1 : 0;
  }
  return Poset(std::move(labels), std::move(leq));
}

bool OrderMap::is_valid() const {
  if (!source || !target) return false;
  const std::size_t n = source->size();
  if (target->size() != n || images.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (std::size_t v : images) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const bool lhs = source->leq(x, y);
      const bool rhs = reversing ? target->leq(images[y], images[x]) : target->leq(images[x], images[y]);
      if (lhs != rhs) return false;
    }
  return true;
}

std::vector<OrderMap> order_isomorphisms(const PosetPtr& p, const PosetPtr& q, bool reversing) {
  if (p->size() != q->size())
    throw Error(ErrorKind::SizeMismatch,
                "posets have " + std::to_string(p->size()) + " and " + std::to_string(q->size()) + " elements");
  const std::size_t n = p->size();
  std::vector<OrderMap> out;
  std::vector<std::size_t> images(n);
  std::vector<bool> used(n, false);

  auto compatible = [&](std::size_t i, std::size_t t) {
    for (std::size_t s = 0; s < i; ++s) {
      const std::size_t u = images[s];
      const bool up = reversing ? q->leq(t, u) : q->leq(u, t);
      const bool down = reversing ? q->leq(u, t) : q->leq(t, u);
      if (p->leq(s, i) != up || p->leq(i, s) != down) return false;
    }
    return true;
  };

  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(OrderMap{p, q, images, reversing});
      return;
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t] || !compatible(i, t)) continue;
      used[t] = true;
      images[i] = t;
      self(self, i + 1);
      used[t] = false;
    }
  };
  extend(extend, 0);
  return out;
}

Poset random_poset(std::size_t n, std::uint64_t numerator, std::uint64_t denominator, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorKind::SizeMismatch, "random poset needs at least one element");
  if (denominator == 0 || numerator > denominator)
    throw Error(ErrorKind::ParseError, "edge probability must lie in [0,1]");
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::uint64_t> draw(0, denominator - 1);
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (draw(gen) < numerator) edges.emplace_back(i, j);
  return Poset::from_index_relations(std::move(labels), edges);
}

}  // namespace fialg
