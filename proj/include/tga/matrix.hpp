#pragma once

#include <optional>
#include <vector>

#include "tga/scalar.hpp"

namespace tga {

/// Dense matrix over Q(i, sqrt5) with exact Gaussian elimination and
/// first-nonzero pivoting; sizes stay in the hundreds.
class ScalarMatrix {
public:
  ScalarMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ScalarMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  size_t rank() const;

  // Solves A x = rhs; nullopt if inconsistent.  Free variables, if any, are
  // set to zero.  `unique` reports whether the solution was unique.
  std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& rhs,
                                           bool* unique = nullptr) const;

  std::optional<ScalarMatrix> inverse() const;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

private:
  size_t rows_, cols_;
  std::vector<Scalar> data_;
};

}  // namespace tga
