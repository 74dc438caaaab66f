#include "fialg/matrix.hpp"

#include <utility>

#include "fialg/error.hpp"

namespace fialg {

Matrix::Matrix(RingSpec ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, RingValue::zero(ring)) {}

Matrix Matrix::identity(RingSpec ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RingValue::one(ring);
  return m;
}

std::vector<RingValue> Matrix::column(std::size_t c) const {
  std::vector<RingValue> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

void Matrix::set_column(std::size_t c, std::span<const RingValue> values) {
  if (values.size() != rows_) throw Error(ErrorKind::SizeMismatch, "column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

std::vector<RingValue> Matrix::apply(std::span<const RingValue> v) const {
  if (v.size() != cols_) throw Error(ErrorKind::SizeMismatch, "vector length mismatch");
  std::vector<RingValue> out(rows_, RingValue::zero(ring_));
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const RingValue& a = (*this)(r, c);
      if (!a.is_zero()) out[r].add_product(a, v[c]);
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_ || !(a.ring_ == b.ring_)) throw Error(ErrorKind::SizeMismatch, "matrix product shapes");
  Matrix out(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const RingValue& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j).add_product(aik, b(k, j));
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::SizeMismatch, "matrix sum shapes");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix lift(const Matrix& m) {
  IntMatrix out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).to_integer();
  return out;
}

struct BareissResult {
  mpz_class det;         // det(M)
  IntMatrix adjugate;    // det(M) * M^{-1}; empty when det = 0
};

// Bareiss elimination on [M | I] followed by exact back substitution.
BareissResult bareiss(const IntMatrix& m, bool want_adjugate) {
  const std::size_t n = m.size();
  const std::size_t width = want_adjugate ? 2 * n : n;
  IntMatrix a(n, std::vector<mpz_class>(width));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m[r][c];
    if (want_adjugate) a[r][n + r] = 1;
  }
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return {0, {}};
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        mpz_class t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  const mpz_class dp = a[n - 1][n - 1];  // det of the row-permuted matrix
  BareissResult out{sign * dp, {}};
  if (!want_adjugate) return out;

  // Solve U X = dp * B column by column; X is integral, so every
  // division below is exact.
  IntMatrix x(n, std::vector<mpz_class>(n));
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t ii = n; ii-- > 0;) {
      mpz_class acc = dp * a[ii][n + col];
      for (std::size_t j = ii + 1; j < n; ++j) acc -= a[ii][j] * x[j][col];
      mpz_divexact(x[ii][col].get_mpz_t(), acc.get_mpz_t(), a[ii][ii].get_mpz_t());
    }
  }
  // The row swaps were applied to the identity block too, so X = dp * M^{-1}.
  out.adjugate = std::move(x);
  if (sign < 0)
    for (auto& row : out.adjugate)
      for (auto& v : row) v = -v;
  return out;
}

// Gauss-Jordan over Q. Returns (det, inverse-if-nonsingular).
std::pair<mpq_class, std::optional<std::vector<std::vector<mpq_class>>>> gauss_rational(const Matrix& m,
                                                                                          bool want_inverse) {
  const std::size_t n = m.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c).to_rational();
    a[r][n + r] = 1;
  }
  mpq_class det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a[p][k]) == 0) ++p;
    if (p == n) return {0, std::nullopt};
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    const mpq_class inv = 1 / a[k][k];
    for (auto& v : a[k]) v *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || sgn(a[i][k]) == 0) continue;
      const mpq_class factor = a[i][k];
      for (std::size_t j = k; j < 2 * n; ++j) a[i][j] -= factor * a[k][j];
    }
  }
  if (!want_inverse) return {det, std::nullopt};
  std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv[r][c] = a[r][n + c];
  return {det, std::move(inv)};
}

void require_square(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::SizeMismatch, "matrix is not square");
}

}  // namespace

RingValue determinant(const Matrix& m) {
  require_square(m);
  const RingSpec& ring = m.ring();
  if (m.rows() == 0) return RingValue::one(ring);
  if (ring.kind == RingKind::rationals) return RingValue::from_rational(ring, gauss_rational(m, false).first);
  return RingValue::from_rational(ring, mpq_class(bareiss(lift(m), false).det));
}

std::optional<Matrix> try_inverse(const Matrix& m) {
  require_square(m);
  const RingSpec& ring = m.ring();
  const std::size_t n = m.rows();
  Matrix out(ring, n, n);
  if (ring.kind == RingKind::rationals) {
    auto [det, inv] = gauss_rational(m, true);
    if (!inv) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) out(r, c) = RingValue::from_rational(ring, (*inv)[r][c]);
    return out;
  }
  if (n == 0) return out;
  auto [det, adj] = bareiss(lift(m), true);
  const RingValue det_value = RingValue::from_rational(ring, mpq_class(det));
  auto det_inv = det_value.try_inverse();
  if (!det_inv || adj.empty()) return std::nullopt;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      out(r, c) = RingValue::from_rational(ring, mpq_class(adj[r][c])) * *det_inv;
  return out;
}

}  // namespace fialg
