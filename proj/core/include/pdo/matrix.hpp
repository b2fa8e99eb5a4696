#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pdo/multipoly.hpp"
#include "pdo/ratfun.hpp"

namespace pdo {

/// Dense row-major matrix with value semantics.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  /// Submatrix on the given rows (in order) and columns (in order).
  Matrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    Matrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
    return out;
  }

  Matrix select_rows(const std::vector<std::size_t>& rows) const {
    std::vector<std::size_t> cols(cols_);
    for (std::size_t j = 0; j < cols_; ++j) cols[j] = j;
    return select(rows, cols);
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using PolyMatrix = Matrix<MultiPoly>;
using RatMatrix = Matrix<RatFun>;

/// Fraction-free (Bareiss) determinant; every intermediate division is
/// exact. Rows are swapped to the sparsest available pivot. det of 0x0 is 1.
MultiPoly bareiss_det(PolyMatrix m);

/// Rank over Q by exact Gaussian elimination.
std::size_t rank_rational(Matrix<Rational> m);

/// Rank over the fraction field by fraction-free elimination done
/// symbolically. Exact, but intermediate entries grow quickly.
std::size_t rank_fraction_free(PolyMatrix m);

/// Multiplies each row by the normalized lcm of its denominators. The
/// factors are returned in `clearing` (one per row).
PolyMatrix clear_row_denominators(const RatMatrix& m, std::vector<MultiPoly>* clearing = nullptr);

struct RankReport {
  std::size_t rank = 0;
  /// Points at which the matrix was specialized; 0 when the symbolic
  /// fallback was used.
  std::size_t evaluations = 0;
  bool symbolic_fallback = false;
};

/// Rank over the fraction field of the polynomial ring, all variables taken
/// as transcendentals.
///
/// A rank r at a random integer point is a lower bound. It is certified as
/// exact by checking rank <= r on a tensor grid that is large enough in each
/// variable to detect any nonzero (r+1)-minor (a polynomial with bounded
/// degree per variable vanishing on such a grid is zero). When that grid
/// would be too large, the symbolic elimination is used instead.
RankReport matrix_rank_over_fraction_field(const RatMatrix& m, std::uint64_t seed = 0x5eedULL);
RankReport matrix_rank_over_fraction_field(const PolyMatrix& m, std::uint64_t seed = 0x5eedULL);

}  // namespace pdo
