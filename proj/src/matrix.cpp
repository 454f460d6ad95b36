#include "mathieu/matrix.hpp"

namespace mathieu {
namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(ScalarMatrix& m, std::vector<Scalar>* rhs) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
      if (rhs) std::swap((*rhs)[pivot], (*rhs)[row]);
    }
    const Scalar inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    if (rhs) (*rhs)[row] *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(r, j) -= factor * m(row, j);
      }
      if (rhs) (*rhs)[r] -= factor * (*rhs)[row];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

ScalarMatrix scalar_matrix(const Ring& ring, std::size_t rows, std::size_t cols) {
  return ScalarMatrix(rows, cols, Scalar::zero(ring));
}

ScalarMatrix scalar_identity(const Ring& ring, std::size_t n) {
  return ScalarMatrix::identity(n, Scalar::zero(ring), Scalar::one(ring));
}

Scalar determinant(ScalarMatrix m) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Scalar det = m.zero() + Scalar::one(m.zero().ring());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return m.zero();
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const Scalar inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(r, j) -= factor * m(col, j);
    }
  }
  return det;
}

std::size_t rank(ScalarMatrix m) { return row_reduce(m, nullptr).size(); }

std::optional<std::vector<Scalar>> solve(ScalarMatrix a, std::vector<Scalar> b) {
  if (b.size() != a.rows()) throw DomainError("right-hand side has wrong length");
  const auto pivots = row_reduce(a, &b);
  for (std::size_t r = pivots.size(); r < a.rows(); ++r) {
    if (!b[r].is_zero()) return std::nullopt;
  }
  std::vector<Scalar> x(a.cols(), a.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = b[r];
  return x;
}

std::string to_string(const ScalarMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += m(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace mathieu
