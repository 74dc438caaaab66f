#include "fialg/linmap.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "fialg/error.hpp"

namespace fialg {

LinMap::LinMap(AlgebraPtr domain, AlgebraPtr codomain, Matrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (!(domain_->ring() == codomain_->ring()) || !(matrix_.ring() == domain_->ring()))
    throw Error(ErrorKind::SpecMismatch, "domain, codomain and matrix must share one ring");
  if (matrix_.cols() != domain_->dim() || matrix_.rows() != codomain_->dim())
    throw Error(ErrorKind::SizeMismatch, "matrix is " + std::to_string(matrix_.rows()) + "x" +
                                             std::to_string(matrix_.cols()) + ", expected " +
                                             std::to_string(codomain_->dim()) + "x" + std::to_string(domain_->dim()));
}

LinMap LinMap::identity(const AlgebraPtr& algebra) {
  return LinMap(algebra, algebra, Matrix::identity(algebra->ring(), algebra->dim()));
}

LinMap LinMap::zero(const AlgebraPtr& domain, const AlgebraPtr& codomain) {
  return LinMap(domain, codomain, Matrix(domain->ring(), codomain->dim(), domain->dim()));
}

AlgElem LinMap::apply(const AlgElem& a) const {
  if (!same_algebra(a.algebra(), domain_)) throw Error(ErrorKind::ContextMismatch, "element is not in the domain");
  return AlgElem(codomain_, matrix_.apply(a.coords()));
}

LinMap LinMap::with_entry(std::size_t row, std::size_t col, const RingValue& value) const {
  Matrix m = matrix_;
  m(row, col) = value;
  return LinMap(domain_, codomain_, std::move(m));
}

LinMap compose(const LinMap& g, const LinMap& f) {
  if (!same_algebra(f.codomain(), g.domain()))
    throw Error(ErrorKind::ContextMismatch, "cannot compose: codomain of the inner map is not the outer domain");
  return LinMap(f.domain(), g.codomain(), g.matrix() * f.matrix());
}

std::optional<LinMap> try_invert(const LinMap& m) {
  if (m.domain()->dim() != m.codomain()->dim()) return std::nullopt;
  auto inv = try_inverse(m.matrix());
  if (!inv) return std::nullopt;
  return LinMap(m.codomain(), m.domain(), std::move(*inv));
}

LinMap invert(const LinMap& m) {
  auto inv = try_invert(m);
  if (!inv)
    throw Error(ErrorKind::NotInvertible, "determinant " + determinant(m.matrix()).to_string() +
                                              " is not a unit of " + m.ring().name());
  return std::move(*inv);
}

namespace {

std::vector<std::vector<RingValue>> basis_images(const LinMap& m) {
  std::vector<std::vector<RingValue>> out;
  out.reserve(m.domain()->dim());
  for (std::size_t i = 0; i < m.domain()->dim(); ++i) out.push_back(m.column(i));
  return out;
}

// Accumulates coeff * m(b_index) into `out`.
void add_image(const LinMap& m, std::size_t index, const RingValue& coeff, std::vector<RingValue>& out) {
  const Matrix& a = m.matrix();
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (!a(r, index).is_zero()) out[r].add_product(a(r, index), coeff);
}

void add_into(std::vector<RingValue>& acc, const std::vector<RingValue>& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
}

// Right multiplication by a fixed element as a matrix: column s is b_s * right.
Matrix right_multiplier(const StructAlgebra& alg, std::span<const RingValue> right) {
  Matrix out(alg.ring(), alg.dim(), alg.dim());
  for (std::size_t s = 0; s < alg.dim(); ++s) out.set_column(s, alg.multiply(alg.basis_vector(s), right));
  return out;
}

}  // namespace

CheckResult check_homomorphism(const LinMap& m, bool anti, const CheckOptions& options) {
  const auto& dom = *m.domain();
  const auto& cod = *m.codomain();
  const std::size_t d = dom.dim();
  const auto images = basis_images(m);
  const RingSpec ring = m.ring();

  CheckResult result = run_check(anti ? "anti_homomorphism" : "homomorphism", d, options.exec,
                                 [&](std::size_t i, CheckResult& slot) {
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<RingValue> lhs(cod.dim(), RingValue::zero(ring));
      for (const auto& t : dom.product(i, j)) add_image(m, t.index, t.coeff, lhs);
      auto rhs = anti ? cod.multiply(images[j], images[i]) : cod.multiply(images[i], images[j]);
      if (lhs == rhs)
        slot.record_pass();
      else
        slot.record_failure({{i, j}, anti ? "m(b_i b_j) != m(b_j) m(b_i)" : "m(b_i b_j) != m(b_i) m(b_j)",
                             std::move(lhs), std::move(rhs)});
    }
  });
  if (options.unital) {
    auto one = m.apply(dom.identity());
    const auto id = cod.identity();
    std::vector<RingValue> expected(id.begin(), id.end());
    if (one == expected)
      result.record_pass();
    else
      result.record_failure({{}, "m(1) != 1", std::move(one), std::move(expected)});
  }
  return result;
}

CheckResult check_jordan(const LinMap& m, const CheckOptions& options) {
  if (!is_two_torsionfree(m.ring()) && !options.allow_torsion)
    throw Error(ErrorKind::TorsionRefused,
                m.ring().name() + " has 2-torsion; the polarized identities do not characterize Jordan maps there");
  const auto& dom = *m.domain();
  const auto& cod = *m.codomain();
  const std::size_t d = dom.dim();
  const RingSpec ring = m.ring();
  const auto images = basis_images(m);

  // products[i*d + j] = m_i m_j ; right[k] = (v -> v m_k)
  std::vector<std::vector<RingValue>> products(d * d);
  std::vector<Matrix> right(d, Matrix(ring, 0, 0));
  for_each_index(d, options.exec, [&](std::size_t i) {
    for (std::size_t j = 0; j < d; ++j) products[i * d + j] = cod.multiply(images[i], images[j]);
    right[i] = right_multiplier(cod, images[i]);
  });

  // Domain side: m applied to a domain coordinate vector given as terms.
  auto image_of_terms = [&](std::span<const StructAlgebra::Term> terms, std::vector<RingValue>& out) {
    for (const auto& t : terms) add_image(m, t.index, t.coeff, out);
  };
  // b_i b_j b_k expanded in the domain basis, accumulated with `out`.
  auto triple_terms = [&](std::size_t i, std::size_t j, std::size_t k, std::vector<RingValue>& out) {
    for (const auto& t : dom.product(i, j))
      for (const auto& u : dom.product(t.index, k)) add_image(m, u.index, t.coeff * u.coeff, out);
  };

  CheckResult pairs = run_check("jordan", d, options.exec, [&](std::size_t i, CheckResult& slot) {
    for (std::size_t j = i; j < d; ++j) {
      std::vector<RingValue> lhs(cod.dim(), RingValue::zero(ring));
      image_of_terms(dom.product(i, j), lhs);
      image_of_terms(dom.product(j, i), lhs);
      auto rhs = products[i * d + j];
      add_into(rhs, products[j * d + i]);
      if (lhs == rhs)
        slot.record_pass();
      else
        slot.record_failure({{i, j}, "pair: m(b_i b_j + b_j b_i) != m_i m_j + m_j m_i", std::move(lhs),
                             std::move(rhs)});
    }
  });
  CheckResult triples = run_check("jordan", d, options.exec, [&](std::size_t i, CheckResult& slot) {
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = i; k < d; ++k) {
        std::vector<RingValue> lhs(cod.dim(), RingValue::zero(ring));
        triple_terms(i, j, k, lhs);
        triple_terms(k, j, i, lhs);
        auto rhs = right[k].apply(products[i * d + j]);
        add_into(rhs, right[i].apply(products[k * d + j]));
        if (lhs == rhs)
          slot.record_pass();
        else
          slot.record_failure({{i, j, k}, "triple: m(b_i b_j b_k + b_k b_j b_i) != m_i m_j m_k + m_k m_j m_i",
                               std::move(lhs), std::move(rhs)});
      }
  });
  // keep both kinds of witness visible
  const std::size_t half = CheckResult::max_witnesses / 2;
  if (!triples.witnesses.empty() && pairs.witnesses.size() > half) pairs.witnesses.resize(half);
  pairs.merge(std::move(triples));
  return pairs;
}

Rebased rebase(const AlgebraPtr& algebra, const Matrix& new_basis) {
  const std::size_t d = algebra->dim();
  if (new_basis.rows() != d || new_basis.cols() != d)
    throw Error(ErrorKind::SizeMismatch, "basis change must be square of the algebra dimension");
  auto inv = try_inverse(new_basis);
  if (!inv) throw Error(ErrorKind::NotInvertible, "basis change is not invertible over " + algebra->ring().name());
  std::vector<std::vector<RingValue>> cols;
  for (std::size_t i = 0; i < d; ++i) cols.push_back(new_basis.column(i));
  std::vector<std::vector<StructAlgebra::Term>> table(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto coords = inv->apply(algebra->multiply(cols[i], cols[j]));
      for (std::size_t k = 0; k < d; ++k)
        if (!coords[k].is_zero()) table[i * d + j].push_back({k, coords[k]});
    }
  auto identity = inv->apply(algebra->identity());
  auto rebased = std::make_shared<const StructAlgebra>(algebra->ring(), d, std::move(table), std::move(identity));
  return {rebased, LinMap(algebra, rebased, std::move(*inv))};
}

Matrix random_basis_change(const RingSpec& ring, std::size_t dim, std::mt19937_64& gen, std::size_t shears) {
  Matrix t(ring, dim, dim);
  std::vector<std::size_t> perm(dim);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), gen);
  for (std::size_t c = 0; c < dim; ++c) t(perm[c], c) = random_unit(ring, gen);
  if (dim < 2) return t;
  std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
  for (std::size_t s = 0; s < shears; ++s) {
    const std::size_t a = pick(gen);
    std::size_t b = pick(gen);
    if (a == b) b = (b + 1) % dim;
    const RingValue r = random_scalar(ring, gen);
    for (std::size_t row = 0; row < dim; ++row)
      if (!t(row, a).is_zero()) t(row, b).add_product(r, t(row, a));
  }
  return t;
}

}  // namespace fialg
