#include "pdo/catalog.hpp"

#include "pdo/operator_algebra.hpp"

namespace pdo::catalog {

namespace {

MultiPoly x(std::uint32_t i) { return MultiPoly::var(x_var(i)); }
MultiPoly mu(std::uint32_t i) { return MultiPoly::var(mu_var(i)); }

DiffOp d2(std::uint32_t a, std::uint32_t b, const RatFun& c = RatFun(1)) { return DiffOp::monomial(2, {a, b}, c); }

}  // namespace

std::vector<DiffOp> wave_boost_triple() {
  const DiffOp l1 = d2(2, 0) - d2(0, 2);
  const DiffOp l2 = d2(1, 0, x(2)) + d2(0, 1, x(1));
  const MultiPoly gamma = MultiPoly::var(gamma_var());
  const DiffOp l3 = compose(l1, l2) - l1.left_multiply(gamma);
  return {l1, l2, l3};
}

MultiPoly wave_boost_relation() {
  return mu(3) - mu(1) * mu(2) + MultiPoly::var(gamma_var()) * mu(1);
}

std::vector<DiffOp> klein_gordon_triple() {
  const DiffOp l1 = d2(2, 0) - d2(0, 2) - d2(0, 0);
  return {l1, compose(d2(1, 0), l1), compose(d2(0, 1), l1)};
}

MultiPoly klein_gordon_relation() { return mu(2).pow(2) - mu(3).pow(2) - mu(1).pow(2) - mu(1).pow(3); }

MultiPoly klein_gordon_sextic_relation() { return mu(2).pow(2) - mu(3).pow(2) - mu(1) - mu(1).pow(6); }

DiffOp example_L_expanded() {
  const MultiPoly lam = MultiPoly::var(lambda_var());
  const MultiPoly x1 = x(1);
  const MultiPoly x2 = x(2);
  const MultiPoly x12 = x1 * x2;
  DiffOp l(2);
  l += d2(2, 2);
  l += d2(1, 2, RatFun(1, x1));
  l += d2(0, 2, RatFun(-1, x1.pow(2)));
  l += d2(2, 1, RatFun(1, x2));
  l += d2(1, 1, RatFun(MultiPoly(1) - Rational(2) * lam * x12, x12));
  l += d2(0, 1, RatFun(MultiPoly(-1) - lam * x12, x1.pow(2) * x2));
  l += d2(2, 0, RatFun(-1, x2.pow(2)));
  l += d2(1, 0, RatFun(MultiPoly(-1) - lam * x12, x1 * x2.pow(2)));
  l += d2(0, 0, RatFun(lam.pow(2)) + RatFun(1, x12.pow(2)) + RatFun(lam, x12));
  return l;
}

std::vector<DiffOp> ordinary_pair() { return {DiffOp::partial(1, 1, 2), DiffOp::partial(1, 1, 3)}; }

}  // namespace pdo::catalog
