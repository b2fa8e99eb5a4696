#include "pdo/gcd.hpp"

#include <algorithm>
#include <limits>

#include "pdo/error.hpp"

namespace pdo {

namespace {

using Univariate = std::vector<MultiPoly>;  // coefficient k multiplies v^k

void trim(Univariate& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

int deg(const Univariate& u) { return static_cast<int>(u.size()) - 1; }

Univariate shift_scale(const Univariate& b, std::size_t shift, const MultiPoly& s) {
  Univariate out(b.size() + shift);
  for (std::size_t k = 0; k < b.size(); ++k) out[k + shift] = b[k] * s;
  return out;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
Univariate prem(Univariate a, const Univariate& b) {
  const int db = deg(b);
  const MultiPoly& lb = b.back();
  int e = deg(a) - db + 1;
  while (!a.empty() && deg(a) >= db) {
    const MultiPoly la = a.back();
    const auto shift = static_cast<std::size_t>(deg(a) - db);
    for (auto& c : a) c *= lb;
    const Univariate sb = shift_scale(b, shift, la);
    for (std::size_t k = 0; k < sb.size(); ++k) a[k] -= sb[k];
    trim(a);
    --e;
  }
  if (e > 0) {
    const MultiPoly f = lb.pow(static_cast<unsigned>(e));
    for (auto& c : a) c *= f;
  }
  return a;
}

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b);

MultiPoly content_of(const Univariate& u) {
  MultiPoly g;
  for (const auto& c : u) {
    g = gcd_impl(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Univariate to_univariate(const MultiPoly& p, VarId v) {
  auto u = p.coefficients_in(v);
  trim(u);
  return u;
}

// gcd of two polynomials that are primitive in v, via the subresultant PRS.
MultiPoly primitive_gcd(Univariate a, Univariate b, VarId v) {
  if (deg(a) < deg(b)) std::swap(a, b);
  MultiPoly g(1);
  MultiPoly h(1);
  while (true) {
    const int delta = deg(a) - deg(b);
    Univariate r = prem(a, b);
    if (r.empty()) break;
    if (deg(r) == 0) return MultiPoly(1);
    const MultiPoly divisor = g * h.pow(static_cast<unsigned>(delta));
    for (auto& c : r) c = exact_quotient(c, divisor);
    a = std::move(b);
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact_quotient(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
  // b is the last nonzero remainder; its primitive part is the gcd.
  const MultiPoly cb = content_of(b);
  for (auto& c : b) c = exact_quotient(c, cb);
  return MultiPoly::from_coefficients(v, b);
}

MultiPoly monomial_gcd(const Term& t, const MultiPoly& p) {
  Monomial g = t.mono;
  for (const auto& s : p.terms()) {
    if (g.is_one()) break;
    g = Monomial::gcd(g, s.mono);
  }
  return MultiPoly::monomial(g);
}

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);
  if (a.is_monomial()) return monomial_gcd(a.leading(), b);
  if (b.is_monomial()) return monomial_gcd(b.leading(), a);

  const MultiPoly na = a.normalized();
  const MultiPoly nb = b.normalized();
  if (na == nb) return na;

  // Pull out the monomial content first; it keeps the recursion small.
  const Monomial ma = na.monomial_content();
  const Monomial mb = nb.monomial_content();
  if (!ma.is_one() || !mb.is_one()) {
    const MultiPoly qa = exact_quotient(na, MultiPoly::monomial(ma));
    const MultiPoly qb = exact_quotient(nb, MultiPoly::monomial(mb));
    return (gcd_impl(qa, qb) * MultiPoly::monomial(Monomial::gcd(ma, mb))).normalized();
  }

  if (na.size() <= nb.size() && divides(na, nb)) return na;
  if (nb.size() <= na.size() && divides(nb, na)) return nb;

  const auto va = na.variables();
  const auto vb = nb.variables();
  // A variable occurring in only one argument can only enter the gcd
  // through that argument's content in it.
  for (const auto v : va) {
    if (!std::binary_search(vb.begin(), vb.end(), v)) return gcd_impl(content_in(na, v), nb);
  }
  for (const auto v : vb) {
    if (!std::binary_search(va.begin(), va.end(), v)) return gcd_impl(na, content_in(nb, v));
  }

  // Main variable: smallest degree keeps the remainder sequence short.
  VarId main = va.front();
  unsigned best = std::numeric_limits<unsigned>::max();
  for (const auto v : va) {
    const unsigned d = std::min(na.degree(v), nb.degree(v));
    if (d < best) {
      best = d;
      main = v;
    }
  }

  Univariate ua = to_univariate(na, main);
  Univariate ub = to_univariate(nb, main);
  const MultiPoly ca = content_of(ua);
  const MultiPoly cb = content_of(ub);
  for (auto& c : ua) c = exact_quotient(c, ca);
  for (auto& c : ub) c = exact_quotient(c, cb);
  const MultiPoly content_gcd = gcd_impl(ca, cb);
  const MultiPoly prim = primitive_gcd(std::move(ua), std::move(ub), main);
  return (content_gcd * prim).normalized();
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) { return gcd_impl(a, b); }

MultiPoly poly_lcm(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const MultiPoly g = poly_gcd(a, b);
  return (exact_quotient(a, g) * b).normalized();
}

MultiPoly content_in(const MultiPoly& p, VarId v) {
  if (!p.involves(v)) return p.normalized();
  return content_of(to_univariate(p, v));
}

MultiPoly content_over(const MultiPoly& p, const std::function<bool(VarId)>& coefficient_var) {
  MultiPoly g;
  for (const auto& [outer, coeff] : p.collect([&](VarId v) { return !coefficient_var(v); })) {
    g = poly_gcd(g, coeff);
    if (g.is_one()) break;
  }
  return g;
}

}  // namespace pdo
