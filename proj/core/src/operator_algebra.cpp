#include "pdo/operator_algebra.hpp"

#include <limits>
#include <map>

#include "pdo/error.hpp"

namespace pdo {

namespace {

void check_dims(const DiffOp& a, const DiffOp& b) {
  if (a.dim() != b.dim())
    throw Error(ErrorKind::DimensionMismatch,
                "dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
}

// Total degree in the x variables; derivatives of higher order vanish.
std::uint32_t x_degree(const MultiPoly& p) {
  std::uint32_t best = 0;
  for (const auto& t : p.terms()) {
    std::uint32_t d = 0;
    for (const auto& pw : t.mono.powers())
      if (pw.var.cls() == VarClass::X) d += pw.exp;
    best = std::max(best, d);
  }
  return best;
}

// Mixed x-derivatives of one coefficient, memoized by multi-index.
class DerivativeCache {
 public:
  explicit DerivativeCache(const RatFun& f) { memo_.emplace(DMono{}, f); }

  const RatFun& get(const DMono& g) {
    const DMono key = strip(g);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    DMono prev = key;
    std::size_t i = key.size() - 1;
    --prev[i];
    const RatFun d = get(prev).derivative(x_var(static_cast<std::uint32_t>(i + 1)));
    return memo_.emplace(key, d).first->second;
  }

 private:
  // Trailing zeros removed so every multi-index has one key.
  static DMono strip(DMono g) {
    while (!g.empty() && g.back() == 0) g.pop_back();
    return g;
  }
  std::map<DMono, RatFun> memo_;
};

Integer multi_binomial(const DMono& a, const DMono& g) {
  Integer r = 1;
  Integer b;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (g[i] == 0 || g[i] == a[i]) continue;
    mpz_bin_uiui(b.get_mpz_t(), a[i], g[i]);
    r *= b;
  }
  return r;
}

// Calls f(gamma) for every gamma <= alpha componentwise with |gamma| <= bound.
template <class F>
void for_each_below(const DMono& alpha, std::uint32_t bound, F&& f) {
  DMono g(alpha.size(), 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i == alpha.size()) {
      f(const_cast<const DMono&>(g));
      return;
    }
    for (std::uint32_t e = 0; e <= alpha[i] && e <= left; ++e) {
      g[i] = e;
      rec(i + 1, left - e);
    }
    g[i] = 0;
  };
  rec(0, bound);
}

}  // namespace

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  check_dims(a, b);
  const std::size_t n = a.dim();
  DiffOp out(n);
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [beta, bc] : b.terms()) {
    DerivativeCache cache(bc);
    const bool x_free = !bc.involves_class(VarClass::X);
    const std::uint32_t bound = x_free ? 0
                                : bc.is_polynomial() ? x_degree(bc.num())
                                                     : std::numeric_limits<std::uint32_t>::max();
    for (const auto& [alpha, ac] : a.terms()) {
      for_each_below(alpha, bound, [&](const DMono& gamma) {
        const RatFun& d = cache.get(gamma);
        if (d.is_zero()) return;
        DMono m(n);
        for (std::size_t i = 0; i < n; ++i) m[i] = alpha[i] - gamma[i] + beta[i];
        const Integer c = multi_binomial(alpha, gamma);
        RatFun term = ac * d;
        if (c != 1) term *= RatFun(Rational(c));
        out.add_term(m, term);
      });
    }
  }
  return out;
}

DiffOp power(const DiffOp& a, unsigned k) {
  DiffOp r = DiffOp::constant(a.dim(), RatFun(1));
  DiffOp base = a;
  while (k > 0) {
    if (k & 1U) r = compose(r, base);
    k >>= 1U;
    if (k > 0) base = compose(base, base);
  }
  return r;
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) {
  check_dims(a, b);
  return compose(a, b) - compose(b, a);
}

ExpFunction apply(const DiffOp& a, const ExpFunction& f) {
  if (a.dim() != f.dim)
    throw Error(ErrorKind::DimensionMismatch,
                "operator dimension " + std::to_string(a.dim()) + ", function dimension " + std::to_string(f.dim));
  const std::size_t n = f.dim;
  // E(alpha) = D^alpha[f] / exp, built one derivative at a time.
  std::map<DMono, RatFun> memo;
  memo.emplace(DMono(n, 0), f.coeff);
  std::function<const RatFun&(const DMono&)> get = [&](const DMono& alpha) -> const RatFun& {
    auto it = memo.find(alpha);
    if (it != memo.end()) return it->second;
    std::size_t i = 0;
    while (alpha[i] == 0) ++i;
    DMono prev = alpha;
    --prev[i];
    const RatFun& r = get(prev);
    const auto idx = static_cast<std::uint32_t>(i + 1);
    RatFun v = r.derivative(x_var(idx)) + r * RatFun(MultiPoly::var(z_var(idx)));
    return memo.emplace(alpha, std::move(v)).first->second;
  };
  RatFun acc;
  for (const auto& [alpha, c] : a.terms()) acc += c * get(alpha);
  return {n, acc};
}

ExpFunction z_derivative(const ExpFunction& f, std::size_t i) {
  if (i < 1 || i > f.dim)
    throw Error(ErrorKind::IndexOutOfRange, "z" + std::to_string(i) + " in dimension " + std::to_string(f.dim));
  const auto idx = static_cast<std::uint32_t>(i);
  return {f.dim, f.coeff.derivative(z_var(idx)) + RatFun(MultiPoly::var(x_var(idx))) * f.coeff};
}

std::optional<DiffOp> right_divide(const DiffOp& t, const DiffOp& k) {
  check_dims(t, k);
  if (k.is_zero()) throw Error(ErrorKind::ZeroDivisor, "right division by the zero operator");
  const std::size_t n = k.dim();
  const auto& [kappa, kc] = k.leading();
  const RatFun kc_inv = kc.inverse();
  DiffOp q(n);
  DiffOp rem = t;
  while (!rem.is_zero()) {
    const auto& [alpha, rc] = rem.leading();
    DMono beta(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (alpha[i] < kappa[i]) return std::nullopt;
      beta[i] = alpha[i] - kappa[i];
    }
    const DiffOp step = DiffOp::monomial(n, beta, rc * kc_inv);
    q += step;
    rem -= compose(step, k);
  }
  return q;
}

std::optional<DiffOp> conjugate_through(const DiffOp& p, const DiffOp& k, int ansatz_order) {
  check_dims(p, k);
  if (k.is_zero()) throw Error(ErrorKind::ZeroDivisor, "conjugation by the zero operator");
  auto l = right_divide(compose(k, p), k);
  if (l && l->order() > ansatz_order) return std::nullopt;
  return l;
}

bool mutually_commute(const std::vector<DiffOp>& ops) {
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j)
      if (!commutator(ops[i], ops[j]).is_zero()) return false;
  return true;
}

namespace {

// Horner scheme in mu_i, mu_{i+1}, ...: with commuting operators,
// sum_a E_a L^a = sum_k (sum E_a L_{>i}^...) ∘ L_i^k.
DiffOp eval_from(const MultiPoly& p, const std::vector<DiffOp>& ops, std::size_t i) {
  const std::size_t n = ops.front().dim();
  while (i < ops.size() && !p.involves(mu_var(static_cast<std::uint32_t>(i + 1)))) ++i;
  if (i == ops.size()) return DiffOp::constant(n, RatFun(p));
  const auto coeffs = p.coefficients_in(mu_var(static_cast<std::uint32_t>(i + 1)));
  DiffOp acc(n);
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = compose(acc, ops[i]);
    if (!coeffs[k].is_zero()) acc += eval_from(coeffs[k], ops, i + 1);
  }
  return acc;
}

}  // namespace

DiffOp eval_poly_at_operators(const MultiPoly& p, const std::vector<DiffOp>& ops) {
  if (ops.empty()) throw Error(ErrorKind::InvalidArgument, "no operators to substitute");
  for (const auto& op : ops) check_dims(ops.front(), op);
  for (const auto v : p.variables()) {
    if (v.cls() == VarClass::Mu && v.index() > ops.size())
      throw Error(ErrorKind::IndexOutOfRange,
                  var_name(v) + " but only " + std::to_string(ops.size()) + " operators given");
  }
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      if (!commutator(ops[i], ops[j]).is_zero())
        throw Error(ErrorKind::NonCommutingOperators,
                    "operators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " do not commute");
    }
  }
  return eval_from(p, ops, 0);
}

bool is_constant_coefficient(const DiffOp& a) {
  for (const auto& [m, c] : a.terms())
    if (c.involves_class(VarClass::X)) return false;
  return true;
}

MultiPoly symbol(const DiffOp& a) {
  MultiPoly s;
  for (const auto& [m, c] : a.terms()) {
    if (!c.is_polynomial() || c.involves_class(VarClass::X))
      throw Error(ErrorKind::NonConstantInput, "operator has non-constant coefficients: " + a.to_string());
    std::vector<Power> pw;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) pw.push_back({z_var(static_cast<std::uint32_t>(i + 1)), m[i]});
    s += c.num() * MultiPoly::monomial(Monomial(std::move(pw)));
  }
  return s;
}

}  // namespace pdo
