#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fialg/ring.hpp"

namespace fialg {

// Dense row-major matrix over one of the exact coefficient rings.
class Matrix {
 public:
  Matrix(RingSpec ring, std::size_t rows, std::size_t cols);
  static Matrix identity(RingSpec ring, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const RingSpec& ring() const noexcept { return ring_; }

  RingValue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const RingValue& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<RingValue> column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const RingValue> values);
  std::vector<RingValue> apply(std::span<const RingValue> v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  RingSpec ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RingValue> data_;
};

// Fraction-free (Bareiss) over the integers and over Z/n (computed on integer
// lifts, then reduced); ordinary elimination over the rationals.
RingValue determinant(const Matrix& m);

// Exact two-sided inverse when the determinant is a unit of the ring.
std::optional<Matrix> try_inverse(const Matrix& m);

}  // namespace fialg
