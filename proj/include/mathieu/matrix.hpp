#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mathieu/errors.hpp"
#include "mathieu/scalar.hpp"

namespace mathieu {

/// Dense row-major matrix over any exact ring-like value type T (Scalar or
/// Polynomial). Zero entries are copies of the prototype passed at
/// construction, so polynomial matrices keep their ring and variables.
template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& zero)
      : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const T& zero() const { return zero_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const {
    for (const auto& x : data_) {
      if (!(x == zero_)) return false;
    }
    return true;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] = a.data_[k] + b.data_[k];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] = a.data_[k] - b.data_[k];
    return out;
  }

  Matrix operator-() const {
    Matrix out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch in product");
    Matrix out(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == a.zero_) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = out(i, j) + aik * b(k, j);
      }
    }
    return out;
  }

  /// m >= 0; repeated squaring.
  Matrix pow(unsigned m, const T& one) const {
    if (!is_square()) throw DomainError("power of a non-square matrix");
    Matrix result = identity(rows_, zero_, one);
    Matrix base = *this;
    while (m > 0) {
      if (m & 1U) result = result * base;
      m >>= 1U;
      if (m > 0) base = base * base;
    }
    return result;
  }

  T trace() const {
    if (!is_square()) throw DomainError("trace of a non-square matrix");
    T out = zero_;
    for (std::size_t i = 0; i < rows_; ++i) out = out + (*this)(i, i);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DomainError("matrix shape mismatch");
  }

  std::size_t rows_;
  std::size_t cols_;
  T zero_;
  std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;

ScalarMatrix scalar_matrix(const Ring& ring, std::size_t rows, std::size_t cols);
ScalarMatrix scalar_identity(const Ring& ring, std::size_t n);

/// Exact determinant by Gaussian elimination over the field.
Scalar determinant(ScalarMatrix m);
std::size_t rank(ScalarMatrix m);
/// One solution of a x = b (free variables set to zero), or nullopt when the
/// system is inconsistent.
std::optional<std::vector<Scalar>> solve(ScalarMatrix a, std::vector<Scalar> b);

/// "[[a, b], [c, d]]".
std::string to_string(const ScalarMatrix& m);

}  // namespace mathieu
