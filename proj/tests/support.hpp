#pragma once

#include <random>
#include <vector>

#include "pdo/diffop.hpp"
#include "pdo/multipoly.hpp"
#include "pdo/operator_algebra.hpp"

namespace pdo::testing {

inline long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline std::vector<VarId> xs(std::size_t n) {
  std::vector<VarId> v;
  for (std::uint32_t i = 1; i <= n; ++i) v.push_back(x_var(i));
  return v;
}

inline MultiPoly random_poly(std::mt19937_64& rng, const std::vector<VarId>& vars, unsigned max_deg,
                             unsigned max_terms, long coef = 4) {
  MultiPoly p;
  const auto terms = 1 + rng() % max_terms;
  for (std::uint64_t t = 0; t < terms; ++t) {
    MultiPoly m(draw(rng, -coef, coef));
    unsigned left = max_deg;
    for (const auto v : vars) {
      const auto e = static_cast<unsigned>(draw(rng, 0, left));
      left -= e;
      m *= MultiPoly::var(v, e);
    }
    p += m;
  }
  return p;
}

inline MultiPoly random_nonzero_poly(std::mt19937_64& rng, const std::vector<VarId>& vars, unsigned max_deg,
                                     unsigned max_terms) {
  MultiPoly p;
  while (p.is_zero()) p = random_poly(rng, vars, max_deg, max_terms);
  return p;
}

inline std::vector<DMono> dmonos_up_to(std::size_t n, std::uint32_t d) {
  std::vector<DMono> out;
  DMono m(n, 0);
  // odometer over [0, d]^n filtered by total degree
  while (true) {
    if (dmono_degree(m) <= d) out.push_back(m);
    std::size_t i = 0;
    while (i < n && m[i] == d) m[i++] = 0;
    if (i == n) break;
    ++m[i];
  }
  return out;
}

/// Random operator of order <= max_order with polynomial x-coefficients;
/// denominators are optional (a single small x factor).
inline DiffOp random_op(std::mt19937_64& rng, std::size_t n, std::uint32_t max_order, bool denominators = false) {
  DiffOp op(n);
  const auto vars = xs(n);
  for (const auto& m : dmonos_up_to(n, max_order)) {
    if (rng() % 3 == 0) continue;
    RatFun c(random_poly(rng, vars, 2, 2));
    if (denominators && rng() % 4 == 0) c = c / RatFun(MultiPoly::var(vars[rng() % n]) + MultiPoly(1));
    op.add_term(m, c);
  }
  if (op.is_zero()) op = DiffOp::constant(n, 1);
  return op;
}

inline DiffOp random_constant_op(std::mt19937_64& rng, std::size_t n, std::uint32_t max_order) {
  DiffOp op(n);
  for (const auto& m : dmonos_up_to(n, max_order))
    if (rng() % 2 == 0) op.add_term(m, RatFun(draw(rng, -3, 3)));
  if (op.is_zero()) op = DiffOp::partial(n, 1);
  return op;
}

}  // namespace pdo::testing
