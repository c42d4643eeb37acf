#pragma once

#include <cstddef>
#include <vector>

#include "mcf/integer.hpp"

namespace mcf {

/// Dense square matrix of big integers, row-major. Only what the convergent
/// products need.
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t dim) : dim_(dim), cells_(dim * dim) {}

  static SquareMatrix identity(std::size_t dim) {
    SquareMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
  }

  /// Companion-style factor: first column is `column`, and column j (j >= 1)
  /// has a single 1 in row j-1.
  static SquareMatrix companion(const std::vector<Integer>& column) {
    SquareMatrix m(column.size());
    for (std::size_t i = 0; i < column.size(); ++i) m(i, 0) = column[i];
    for (std::size_t j = 1; j < column.size(); ++j) m(j - 1, j) = 1;
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }

  Integer& operator()(std::size_t r, std::size_t c) { return cells_[r * dim_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return cells_[r * dim_ + c]; }

  std::vector<Integer> column(std::size_t c) const {
    std::vector<Integer> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  friend SquareMatrix operator*(const SquareMatrix& lhs, const SquareMatrix& rhs) {
    SquareMatrix out(lhs.dim_);
    for (std::size_t i = 0; i < lhs.dim_; ++i) {
      for (std::size_t k = 0; k < lhs.dim_; ++k) {
        const Integer& l = lhs(i, k);
        if (l == 0) continue;
        for (std::size_t j = 0; j < lhs.dim_; ++j) out(i, j) += l * rhs(k, j);
      }
    }
    return out;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Integer> cells_;
};

}  // namespace mcf
