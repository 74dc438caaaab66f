#include "fialg/series.hpp"

#include "fialg/error.hpp"

namespace fialg {

FinSeries::FinSeries(PosetPtr poset, RingSpec ring) : poset_(std::move(poset)), ring_(ring) {}

FinSeries FinSeries::delta(PosetPtr poset, RingSpec ring) {
  FinSeries f(std::move(poset), ring);
  for (std::size_t x = 0; x < f.poset().size(); ++x) f.entries_.emplace(Key{x, x}, RingValue::one(ring));
  return f;
}

FinSeries FinSeries::unit(PosetPtr poset, RingSpec ring, std::size_t x, std::size_t y) {
  FinSeries f(std::move(poset), ring);
  f.set(x, y, RingValue::one(ring));
  return f;
}

FinSeries FinSeries::subset_idempotent(PosetPtr poset, RingSpec ring, const std::vector<bool>& members) {
  FinSeries f(std::move(poset), ring);
  if (members.size() != f.poset().size()) throw Error(ErrorKind::SizeMismatch, "subset mask has wrong length");
  for (std::size_t x = 0; x < members.size(); ++x)
    if (members[x]) f.entries_.emplace(Key{x, x}, RingValue::one(ring));
  return f;
}

FinSeries FinSeries::zeta(PosetPtr poset, RingSpec ring) {
  FinSeries f(std::move(poset), ring);
  const auto& p = f.poset();
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.leq(x, y)) f.entries_.emplace(Key{x, y}, RingValue::one(ring));
  return f;
}

RingValue FinSeries::at(std::size_t x, std::size_t y) const {
  auto it = entries_.find({x, y});
  return it == entries_.end() ? RingValue::zero(ring_) : it->second;
}

void FinSeries::set(std::size_t x, std::size_t y, const RingValue& value) {
  if (x >= poset().size() || y >= poset().size()) throw Error(ErrorKind::UnknownElement, "index out of range");
  if (!(value.spec() == ring_)) throw Error(ErrorKind::SpecMismatch, "value from " + value.spec().name());
  if (value.is_zero()) {
    entries_.erase({x, y});
    return;
  }
  if (!poset().leq(x, y))
    throw Error(ErrorKind::NotComparable, poset().label(x) + " is not below " + poset().label(y));
  entries_[{x, y}] = value;
}

void FinSeries::add_to(std::size_t x, std::size_t y, const RingValue& value) {
  if (value.is_zero()) return;
  set(x, y, at(x, y) + value);
}

bool FinSeries::same_context(const FinSeries& other) const {
  return ring_ == other.ring_ && (poset_ == other.poset_ || *poset_ == *other.poset_);
}

FinSeries& FinSeries::operator+=(const FinSeries& other) {
  if (!same_context(other)) throw Error(ErrorKind::ContextMismatch, "series over different posets or rings");
  for (const auto& [key, v] : other.entries_) add_to(key.first, key.second, v);
  return *this;
}

FinSeries& FinSeries::operator-=(const FinSeries& other) {
  if (!same_context(other)) throw Error(ErrorKind::ContextMismatch, "series over different posets or rings");
  for (const auto& [key, v] : other.entries_) add_to(key.first, key.second, -v);
  return *this;
}

FinSeries FinSeries::scaled(const RingValue& r) const {
  FinSeries out(poset_, ring_);
  for (const auto& [key, v] : entries_) {
    RingValue p = v * r;
    if (!p.is_zero()) out.entries_.emplace(key, std::move(p));
  }
  return out;
}

namespace {

// Accumulates row x of f*g into `row` (indexed by y); returns touched columns.
void convolve_row(const FinSeries& f, const FinSeries& g, std::size_t x, std::vector<RingValue>& row,
                  std::vector<bool>& touched) {
  const auto& fe = f.entries();
  const auto& ge = g.entries();
  for (auto it = fe.lower_bound({x, 0}); it != fe.end() && it->first.first == x; ++it) {
    const std::size_t z = it->first.second;
    for (auto jt = ge.lower_bound({z, 0}); jt != ge.end() && jt->first.first == z; ++jt) {
      const std::size_t y = jt->first.second;
      row[y].add_product(it->second, jt->second);
      touched[y] = true;
    }
  }
}

}  // namespace

FinSeries convolve(const FinSeries& f, const FinSeries& g, Exec exec) {
  if (!f.same_context(g)) throw Error(ErrorKind::ContextMismatch, "convolving series over different contexts");
  const std::size_t n = f.poset().size();
  std::vector<std::vector<std::pair<std::size_t, RingValue>>> rows(n);
  for_each_index(n, exec, [&](std::size_t x) {
    std::vector<RingValue> row(n, RingValue::zero(f.ring()));
    std::vector<bool> touched(n, false);
    convolve_row(f, g, x, row, touched);
    for (std::size_t y = 0; y < n; ++y)
      if (touched[y] && !row[y].is_zero()) rows[x].emplace_back(y, std::move(row[y]));
  });
  FinSeries out(f.poset_ptr(), f.ring());
  for (std::size_t x = 0; x < n; ++x)
    for (auto& [y, v] : rows[x]) out.set(x, y, v);
  return out;
}

FinSeries sandwich(const FinSeries& f, std::size_t x, std::size_t y) {
  FinSeries out(f.poset_ptr(), f.ring());
  if (x >= f.poset().size() || y >= f.poset().size()) throw Error(ErrorKind::UnknownElement, "index out of range");
  if (f.poset().leq(x, y)) out.set(x, y, f.at(x, y));
  return out;
}

std::pair<FinSeries, FinSeries> split_diag(const FinSeries& f) {
  FinSeries d(f.poset_ptr(), f.ring());
  FinSeries z(f.poset_ptr(), f.ring());
  for (const auto& [key, v] : f.entries()) (key.first == key.second ? d : z).set(key.first, key.second, v);
  return {std::move(d), std::move(z)};
}

FinSeries truncate(const FinSeries& f, std::size_t x, Truncation mode) {
  FinSeries out(f.poset_ptr(), f.ring());
  for (const auto& [key, v] : f.entries()) {
    const auto [u, w] = key;
    const bool keep = mode == Truncation::above ? (u == x && w != x) : (w == x && u != x);
    if (keep) out.set(u, w, v);
  }
  return out;
}

FinSeries unit_inverse(const FinSeries& u) {
  const Poset& p = u.poset();
  const std::size_t n = p.size();
  std::vector<RingValue> diag_inv;
  diag_inv.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto inv = u.at(x, x).try_inverse();
    if (!inv)
      throw Error(ErrorKind::NotAUnit, "diagonal entry at " + p.label(x) + " (" + u.at(x, x).to_string() +
                                           ") is not a unit of " + u.ring().name());
    diag_inv.push_back(*inv);
  }
  // v(x,y) = -u(x,x)^{-1} sum_{x < z <= y} u(x,z) v(z,y); visit x from the top
  // of a linear extension so every v(z, .) with z > x is already final.
  FinSeries v(u.poset_ptr(), u.ring());
  auto order = p.linear_extension();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t x = *it;
    v.set(x, x, diag_inv[x]);
    for (std::size_t y = 0; y < n; ++y) {
      if (!p.less(x, y)) continue;
      RingValue acc = RingValue::zero(u.ring());
      for (const auto& [key, val] : u.entries()) {
        if (key.first != x || key.second == x) continue;
        const std::size_t z = key.second;
        if (p.leq(z, y)) acc.add_product(val, v.at(z, y));
      }
      v.set(x, y, -(diag_inv[x] * acc));
    }
  }
  return v;
}

FinSeries random_series(PosetPtr poset, RingSpec ring, std::mt19937_64& gen, double density) {
  FinSeries f(poset, ring);
  std::bernoulli_distribution fill(density);
  for (std::size_t x = 0; x < poset->size(); ++x)
    for (std::size_t y = 0; y < poset->size(); ++y)
      if (poset->leq(x, y) && fill(gen)) f.set(x, y, random_scalar(ring, gen));
  return f;
}

}  // namespace fialg
