#pragma once

#include "cychom/rational.hpp"

#include <optional>
#include <vector>

namespace cychom {

// Dense exact-rational matrix, just large enough for the homology engine:
// reduced row echelon form, rank, kernel and solving. No floating point.
class RatMat {
public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  // Gauss-Jordan in place; returns pivot column indices in order.
  std::vector<std::size_t> rref();

  std::size_t rank() const;

  // basis of the null space, one vector per free column
  std::vector<std::vector<Rational>> kernel() const;

  // one solution of A x = b, if any
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

} // namespace cychom
