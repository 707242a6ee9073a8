#include "cychom/ratmat.hpp"

namespace cychom {

std::vector<std::size_t> RatMat::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t p = row;
    while (p < rows_ && at(p, col) == 0) ++p;
    if (p == rows_) continue;
    if (p != row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(at(p, c), at(row, c));
    const Rational inv = at(row, col);
    for (std::size_t c = col; c < cols_; ++c) at(row, c) /= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || at(r, col) == 0) continue;
      const Rational f = at(r, col);
      for (std::size_t c = col; c < cols_; ++c) at(r, c) -= f * at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t RatMat::rank() const {
  RatMat copy = *this;
  return copy.rref().size();
}

std::vector<std::vector<Rational>> RatMat::kernel() const {
  RatMat copy = *this;
  const auto pivots = copy.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(cols_, Rational(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -copy.at(i, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> RatMat::solve(const std::vector<Rational>& b) const {
  RatMat aug(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_) = b[r];
  }
  const auto pivots = aug.rref();
  for (std::size_t c : pivots)
    if (c == cols_) return std::nullopt; // inconsistent
  std::vector<Rational> x(cols_, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, cols_);
  return x;
}

} // namespace cychom
