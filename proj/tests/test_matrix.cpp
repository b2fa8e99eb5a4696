#include <gtest/gtest.h>

#include <random>

#include "pdo/matrix.hpp"
#include "support.hpp"

using namespace pdo;

namespace {

MultiPoly cofactor_det(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return MultiPoly(1);
  if (n == 1) return m(0, 0);
  MultiPoly acc;
  std::vector<std::size_t> rows;
  for (std::size_t r = 1; r < n; ++r) rows.push_back(r);
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < n; ++k)
      if (k != c) cols.push_back(k);
    const MultiPoly sub = m(0, c) * cofactor_det(m.select(rows, cols));
    if (c % 2 == 0) acc += sub; else acc -= sub;
  }
  return acc;
}

PolyMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, bool sparse) {
  PolyMatrix m(r, c);
  const std::vector<VarId> vars{x_var(1), mu_var(1)};
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (!sparse || rng() % 2 == 0) m(i, j) = pdo::testing::random_poly(rng, vars, 2, 2, 3);
  return m;
}

}  // namespace

TEST(Bareiss, AgreesWithCofactorExpansion) {
  std::mt19937_64 rng(21);
  for (std::size_t n = 0; n <= 5; ++n) {
    for (int t = 0; t < 8; ++t) {
      const PolyMatrix m = random_matrix(rng, n, n, t % 2 == 1);
      EXPECT_EQ(bareiss_det(m), cofactor_det(m)) << "n=" << n << " trial " << t;
    }
  }
}

TEST(Bareiss, SingularAndPermuted) {
  PolyMatrix m(3, 3);
  const MultiPoly x = MultiPoly::var(x_var(1));
  m(0, 1) = x; m(1, 0) = 1; m(2, 2) = x + 1;
  EXPECT_EQ(bareiss_det(m), cofactor_det(m));
  m(2, 0) = 2; m(2, 1) = 0; m(2, 2) = 0;
  m(0, 0) = 0;
  PolyMatrix s = m;
  s(2, 1) = 0;
  for (std::size_t j = 0; j < 3; ++j) s(2, j) = s(1, j) * x;
  EXPECT_TRUE(bareiss_det(s).is_zero());
}

TEST(Rank, RationalGauss) {
  Matrix<Rational> m(3, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
  m(2, 0) = 0; m(2, 1) = 1; m(2, 2) = Rational(1, 2);
  EXPECT_EQ(rank_rational(m), 2u);
}

TEST(Rank, FractionFieldMatchesSymbolic) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 10; ++t) {
    // rank <= 2 by construction: rows are combinations of two random rows
    PolyMatrix base = random_matrix(rng, 2, 4, false);
    PolyMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
      const auto a = pdo::testing::random_poly(rng, {x_var(1)}, 1, 2);
      const auto b = pdo::testing::random_poly(rng, {x_var(1)}, 1, 2);
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = a * base(0, j) + b * base(1, j);
    }
    const auto sym = rank_fraction_free(m);
    EXPECT_LE(sym, 2u);
    EXPECT_EQ(matrix_rank_over_fraction_field(m).rank, sym);
  }
}

TEST(Rank, RationalFunctionEntriesAreCleared) {
  RatMatrix m(2, 2);
  const MultiPoly x = MultiPoly::var(x_var(1));
  m(0, 0) = RatFun(1, x); m(0, 1) = RatFun(1);
  m(1, 0) = RatFun(1); m(1, 1) = RatFun(x);
  EXPECT_EQ(matrix_rank_over_fraction_field(m).rank, 1u);
  std::vector<MultiPoly> clearing;
  const PolyMatrix p = clear_row_denominators(m, &clearing);
  EXPECT_EQ(clearing[0], x);
  EXPECT_EQ(p(0, 1), x);
}
