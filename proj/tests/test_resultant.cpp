#include <gtest/gtest.h>

#include <random>
#include <set>

#include "pdo/catalog.hpp"
#include "pdo/error.hpp"
#include "pdo/gcd.hpp"
#include "pdo/operator_algebra.hpp"
#include "pdo/resultant.hpp"
#include "support.hpp"

using namespace pdo;

namespace {

const MultiPoly mu1 = MultiPoly::var(mu_var(1));
const MultiPoly mu2 = MultiPoly::var(mu_var(2));

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Classical Sylvester resultant in z of a(z) - mu1 and b(z) - mu2.
MultiPoly sylvester(const MultiPoly& a, const MultiPoly& b) {
  const VarId z = z_var(1);
  auto ca = (a - mu1).coefficients_in(z);
  auto cb = (b - mu2).coefficients_in(z);
  const std::size_t m = ca.size() - 1;
  const std::size_t n = cb.size() - 1;
  PolyMatrix s(m + n, m + n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s(r, r + k) = ca[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s(n + r, r + k) = cb[n - k];
  return bareiss_det(s);
}

std::vector<DiffOp> random_commuting_triple(std::mt19937_64& rng) {
  const auto ab = catalog::wave_boost_triple();
  MultiPoly q;
  while (q.is_constant()) q = pdo::testing::random_poly(rng, {mu_var(1), mu_var(2)}, 2, 3);
  return {ab[0], ab[1], eval_poly_at_operators(q, {ab[0], ab[1]})};
}

}  // namespace

TEST(Basis, OmegaSizesAndOrder) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::uint32_t d = 0; d <= 4; ++d) EXPECT_EQ(omega_basis(n, d).size(), binom(n + d, n));
  const auto b = omega_basis(2, 2);
  EXPECT_EQ(b.entries.front(), (DMono{2, 0}));
  EXPECT_EQ(b.entries.back(), (DMono{0, 0}));
  EXPECT_THROW(coeff_vector(DiffOp::partial(2, 1, 3), 2), Error);
}

TEST(Matrix, ShapesOfTheExamples) {
  const auto wb = build_resultant_matrix(catalog::wave_boost_triple(), 2);
  EXPECT_EQ(wb.N, 4);
  EXPECT_EQ(wb.row_count(), 19u);
  EXPECT_EQ(wb.column_count(), 15u);
  const auto kg = build_resultant_matrix(catalog::klein_gordon_triple(), 2);
  EXPECT_EQ(kg.column_count(), 28u);
  const auto one = build_resultant_matrix(catalog::ordinary_pair(), 1);
  EXPECT_EQ(one.N, 4);
  EXPECT_EQ(one.row_count(), 5u);
  EXPECT_EQ(one.column_count(), 5u);
}

TEST(Matrix, Errors) {
  EXPECT_THROW(build_resultant_matrix({DiffOp::partial(2, 1)}, 2), Error);
  EXPECT_THROW(build_resultant_matrix({DiffOp::partial(1, 1), DiffOp(1)}, 1), Error);
}

TEST(Matrix, RowReassembly) {
  for (const auto& ops : {catalog::wave_boost_triple(), catalog::ordinary_pair()}) {
    const std::size_t n = ops.size() - 1;
    const auto m = build_resultant_matrix(ops, n);
    for (std::size_t r = 0; r < m.row_count(); ++r) {
      DiffOp row(n);
      for (std::size_t c = 0; c < m.column_count(); ++c)
        if (!m.rows(r, c).is_zero()) row.add_term(m.columns.entries[c], RatFun(m.rows(r, c), m.clearing[r]));
      EXPECT_EQ(row, m.row_generator(r)) << "row " << r;
    }
  }
}

TEST(Selections, YoungEnumeratesEveryMaximalMinorOnce) {
  for (const auto& [rows, cols] : std::vector<std::pair<std::size_t, std::size_t>>{{5, 5}, {7, 4}, {9, 3}, {19, 15}}) {
    YoungSelections ys(rows, cols);
    std::set<RowSelection> seen;
    RowSelection s;
    while (ys.next(s)) {
      ASSERT_EQ(s.size(), cols);
      ASSERT_TRUE(std::is_sorted(s.begin(), s.end()));
      ASSERT_LT(s.back(), rows);
      seen.insert(s);
    }
    EXPECT_EQ(seen.size(), binom(rows, cols));
  }
  EXPECT_THROW(YoungSelections(3, 4), Error);
}

TEST(Selections, SampledIsDeterministicAndValid) {
  SampledSelections a(19, 15, 7);
  SampledSelections b(19, 15, 7);
  for (int i = 0; i < 50; ++i) {
    const auto s = a.next();
    EXPECT_EQ(s, b.next());
    EXPECT_EQ(std::set<std::size_t>(s.begin(), s.end()).size(), 15u);
    EXPECT_LT(*std::max_element(s.begin(), s.end()), 19u);
  }
}

TEST(Resultant, OneVariableMatchesSylvester) {
  const MultiPoly z = MultiPoly::var(z_var(1));
  EXPECT_EQ(differential_resultant(catalog::ordinary_pair(), 1).value, (mu1.pow(3) - mu2.pow(2)).normalized());
  std::mt19937_64 rng(51);
  for (int t = 0; t < 12; ++t) {
    const auto a = pdo::testing::random_constant_op(rng, 1, 1 + rng() % 3);
    const auto b = pdo::testing::random_constant_op(rng, 1, 1 + rng() % 3);
    if (a.order() < 1 || b.order() < 1) continue;
    const auto out = differential_resultant({a, b}, 1);
    const MultiPoly want = sylvester(symbol(a), symbol(b));
    if (want.is_zero()) {
      EXPECT_NE(out.kind, ResultantKind::Poly);
    } else {
      ASSERT_EQ(out.kind, ResultantKind::Poly) << a.to_string() << " ; " << b.to_string();
      EXPECT_EQ(out.value, want.normalized());
    }
  }
  (void)z;
}

TEST(Resultant, KleinGordonIsZeroByRank) {
  ResultantOptions o;
  o.mode = ResultantMode::RankOnly;
  const auto out = differential_resultant(catalog::klein_gordon_triple(), 2, o);
  EXPECT_EQ(out.kind, ResultantKind::Zero);
  EXPECT_LT(out.rank, 28u);
  // every sampled minor vanishes as well
  const auto m = build_resultant_matrix(catalog::klein_gordon_triple(), 2);
  std::size_t seen = 0;
  partial_resultants(m, MinorMode::Sampled, 6, 3, [&](const RowSelection&, const MultiPoly& v) {
    EXPECT_TRUE(v.is_zero());
    return ++seen < 6;
  });
  EXPECT_EQ(seen, 6u);
}

TEST(Resultant, FullRankIsNonzeroInRankOnlyMode) {
  ResultantOptions o;
  o.mode = ResultantMode::RankOnly;
  const auto out = differential_resultant(catalog::wave_boost_triple(), 2, o);
  EXPECT_EQ(out.kind, ResultantKind::Nonzero);
  EXPECT_EQ(out.rank, 15u);
}

TEST(Resultant, PartialResultantsAnnihilateCommutingTriples) {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 3; ++t) {
    const auto ops = random_commuting_triple(rng);
    const auto m = build_resultant_matrix(ops, 2);
    std::size_t nonzero = 0;
    partial_resultants(m, MinorMode::Sampled, 4, rng(), [&](const RowSelection&, const MultiPoly& v) {
      if (v.is_zero()) return true;
      ++nonzero;
      EXPECT_FALSE(v.involves_class(VarClass::Z));
      EXPECT_TRUE(verify_annihilation(v, ops));
      return nonzero < 2;
    });
  }
}

TEST(Resultant, SampledIsAMultipleOfExhaustive) {
  const auto ops = catalog::ordinary_pair();
  const std::vector<DiffOp> two{DiffOp::partial(1, 1, 2) + DiffOp::constant(1, RatFun(MultiPoly::var(x_var(1)))),
                                DiffOp::partial(1, 1, 3)};
  for (const auto& family : {ops, two}) {
    const auto ex = differential_resultant(family, 1);
    ResultantOptions o;
    o.mode = ResultantMode::Sampled;
    o.samples = 3;
    o.seed = 9;
    const auto sm = differential_resultant(family, 1, o);
    ASSERT_EQ(ex.kind, ResultantKind::Poly);
    if (sm.kind == ResultantKind::Poly)
      EXPECT_TRUE(divides(ex.value * ex.x_content, sm.value * sm.x_content));
  }
}

TEST(Resultant, WorkersDoNotChangeTheAnswer) {
  ResultantOptions o;
  o.mode = ResultantMode::Sampled;
  o.samples = 12;
  o.seed = 5;
  const auto a = differential_resultant(catalog::wave_boost_triple(), 2, o);
  o.workers = 3;
  const auto b = differential_resultant(catalog::wave_boost_triple(), 2, o);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.x_content, b.x_content);
  EXPECT_EQ(a.nonzero_minors, b.nonzero_minors);
}

TEST(Dform, RoundtripOnSylvesterCase) {
  const auto m = build_resultant_matrix(catalog::ordinary_pair(), 1);
  RowSelection all{0, 1, 2, 3, 4};
  const auto d = dform_decomposition(m, all);
  DiffOp sum(1);
  for (std::size_t i = 0; i < d.size(); ++i)
    sum += compose(d[i], m.operators[i] - DiffOp::constant(1, RatFun(MultiPoly::var(mu_var(i + 1)))));
  EXPECT_EQ(sum, DiffOp::constant(1, RatFun(minor_value(m, all))));
  EXPECT_TRUE(sum.constant_term().num().normalized() == (mu1.pow(3) - mu2.pow(2)).normalized());
}

TEST(Dform, Errors) {
  const auto m = build_resultant_matrix(catalog::ordinary_pair(), 1);
  EXPECT_THROW(dform_decomposition(m, {0, 1}), Error);
  EXPECT_THROW(dform_decomposition(m, {0, 1, 2, 3, 9}), Error);
}

TEST(ZerosAtInfinity, KleinGordon) {
  const auto pts = homogenized_symbol_zero_check(catalog::klein_gordon_triple());
  EXPECT_NE(std::find(pts.begin(), pts.end(), std::vector<long>{1, -1, 0}), pts.end());
  EXPECT_TRUE(homogenized_symbol_zero_check(catalog::ordinary_pair()).empty());
}
