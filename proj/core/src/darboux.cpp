#include "pdo/darboux.hpp"

#include "pdo/catalog.hpp"
#include "pdo/error.hpp"
#include "pdo/gcd.hpp"
#include "pdo/operator_algebra.hpp"

namespace pdo {

bool verify_factorization(const FactorizationWitness& w) {
  if (!is_constant_coefficient(w.p)) return false;
  if (w.left.dim() != w.right.dim() || w.left.dim() != w.p.dim()) return false;
  return compose(w.left, w.right) == w.p;
}

ExampleFactorization build_example_K() {
  constexpr std::size_t n = 2;
  const MultiPoly lam = MultiPoly::var(lambda_var());
  const MultiPoly x12 = MultiPoly::var(x_var(1)) * MultiPoly::var(x_var(2));
  const DiffOp core = DiffOp::monomial(n, {1, 1}) - DiffOp::constant(n, RatFun(lam));
  const DiffOp k =
      compose(compose(DiffOp::constant(n, RatFun(x12)), core), DiffOp::constant(n, RatFun(MultiPoly(1), x12)));
  return {k, catalog::example_L_expanded(), power(core, 3)};
}

EigenfunctionData normalized_eigenfunction(const DiffOp& k) {
  if (k.is_zero()) throw Error(ErrorKind::ZeroOperator, "eigenfunction of the zero operator");
  const ExpFunction image = apply(k, ExpFunction::plane_wave(k.dim()));
  EigenfunctionData out;
  out.sigma0 = image.coeff.den();
  out.g = MultiPoly();
  for (const auto& [outer, rho] : image.coeff.num().collect([](VarId v) { return v.cls() == VarClass::X; })) {
    out.pairs.push_back({rho, outer});
    out.g = poly_gcd(out.g, rho);
  }
  out.psi = {k.dim(), image.coeff / RatFun(out.g)};
  return out;
}

bool kernel_membership(const DiffOp& k, const DiffOp& q, const SpectralConstraint& c) {
  if (!is_constant_coefficient(q)) throw Error(ErrorKind::NonConstantQ, "q must have constant coefficients: " + q.to_string());
  if (c.i < 1 || c.j < 1 || c.i > k.dim() || c.j > k.dim())
    throw Error(ErrorKind::IndexOutOfRange, "spectral constraint index outside the dimension");
  const MultiPoly sigma0 = normalized_eigenfunction(k).sigma0;
  const ExpFunction f = apply(compose(k, q), ExpFunction{k.dim(), RatFun(sigma0)});
  const VarId zi = z_var(static_cast<std::uint32_t>(c.i));
  const VarId zj = z_var(static_cast<std::uint32_t>(c.j));
  // Only the numerator matters: the denominator is a nonzero function of x.
  for (const auto& [outer, coeff] : f.coeff.num().collect([](VarId v) { return v.cls() == VarClass::X; })) {
    if (!reduce_mod_binomial(coeff, zi, zj, c.rhs).is_zero()) return false;
  }
  return true;
}

namespace {

MultiPoly curve(VarId x, VarId y, const MultiPoly& lambda) {
  return MultiPoly::var(x) * MultiPoly::var(y) - lambda;
}

}  // namespace

bool rlambda_membership(const MultiPoly& q, VarId x, VarId y, const MultiPoly& lambda) {
  if (x == y) throw Error(ErrorKind::MalformedIdeal, "the two variables must differ");
  if (lambda.involves(x) || lambda.involves(y)) throw Error(ErrorKind::MalformedIdeal, "lambda involves x or y");
  const MultiPoly h = curve(x, y, lambda);
  const MultiPoly qx = q.derivative(x);
  const MultiPoly qy = q.derivative(y);
  return divides(h, qx) && divides(h, qy) && divides(h, qx.derivative(y));
}

RLambdaDecomposition rlambda_decompose(const MultiPoly& q, VarId x, VarId y, const MultiPoly& lambda) {
  if (lambda.is_zero())
    throw Error(ErrorKind::DegenerateLambda, "decomposition requires lambda != 0");
  if (!rlambda_membership(q, x, y, lambda)) throw Error(ErrorKind::NotInRing, "not a member: " + q.to_string());
  // A member is constant along xy = lambda; (1, lambda) is a point on it.
  const MultiPoly c = q.substitute(x, MultiPoly(1)).substitute(y, lambda);
  const auto g = divide_exact(q - c, curve(x, y, lambda).pow(3));
  if (!g) throw Error(ErrorKind::InvariantViolation, "member without a cubic decomposition: " + q.to_string());
  if (*g * curve(x, y, lambda).pow(3) + c != q) throw Error(ErrorKind::InvariantViolation, "decomposition does not expand back");
  return {*g, c};
}

bool isom_check(const DiffOp& q, const MultiPoly& lambda) {
  DiffOp k = build_example_K().K;
  if (lambda != MultiPoly::var(lambda_var()))
    k = k.map_coefficients([&](const RatFun& c) { return c.substitute(lambda_var(), lambda); });
  const bool kernel = kernel_membership(k, q, {1, 2, lambda});
  const bool ring = rlambda_membership(symbol(q), z_var(1), z_var(2), lambda);
  return kernel == ring;
}

}  // namespace pdo
