#include "tga/matrix.hpp"

#include <stdexcept>

namespace tga {

ScalarMatrix ScalarMatrix::identity(size_t n) {
  ScalarMatrix m(n, n);
  for (size_t k = 0; k < n; ++k) m.at(k, k) = Scalar(1);
  return m;
}

namespace {

// Row echelon elimination in place; returns pivot columns.
std::vector<size_t> eliminate(ScalarMatrix& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t pivot = row;
    while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (size_t c = 0; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(pivot, c));
    Scalar inv = m.at(row, col).inverse();
    for (size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      Scalar factor = m.at(r, col);
      for (size_t c = col; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

size_t ScalarMatrix::rank() const {
  ScalarMatrix copy = *this;
  return eliminate(copy).size();
}

std::optional<std::vector<Scalar>> ScalarMatrix::solve(const std::vector<Scalar>& rhs,
                                                       bool* unique) const {
  if (rhs.size() != rows_) throw std::invalid_argument("ScalarMatrix::solve: size mismatch");
  ScalarMatrix aug(rows_, cols_ + 1);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_) = rhs[r];
  }
  auto pivots = eliminate(aug);
  // Inconsistent iff a pivot landed in the rhs column.
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  if (unique) *unique = pivots.size() == cols_;
  std::vector<Scalar> x(cols_);
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, cols_);
  return x;
}

std::optional<ScalarMatrix> ScalarMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  ScalarMatrix aug(rows_, 2 * cols_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_ + r) = Scalar(1);
  }
  auto pivots = eliminate(aug);
  if (pivots.size() != cols_ || pivots.back() != cols_ - 1) return std::nullopt;
  ScalarMatrix inv(rows_, cols_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
  return inv;
}

std::vector<Scalar> ScalarMatrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("ScalarMatrix::apply: size mismatch");
  std::vector<Scalar> out(rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) {
      if (at(r, c).is_zero() || v[c].is_zero()) continue;
      out[r] += at(r, c) * v[c];
    }
  return out;
}

}  // namespace tga
