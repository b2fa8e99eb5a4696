#pragma once

#include <functional>

#include "pdo/multipoly.hpp"

namespace pdo {

/// Greatest common divisor in Q[vars], in unit normal form (primitive over
/// Z, positive grlex leading coefficient). gcd(0, 0) = 0.
///
/// Recursive: variables present in only one argument are eliminated through
/// contents; otherwise a main variable is chosen and a subresultant
/// remainder sequence runs over the coefficient ring of the others.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

/// Normalized least common multiple; lcm(0, p) = 0.
MultiPoly poly_lcm(const MultiPoly& a, const MultiPoly& b);

/// Content of p seen as a polynomial in v (gcd of its coefficients).
MultiPoly content_in(const MultiPoly& p, VarId v);

/// Content of p seen as a polynomial in the variables *not* selected by
/// `coefficient_var`, with coefficients in the ring of those that are.
/// E.g. the x-content: coefficient_var = "is an X variable".
MultiPoly content_over(const MultiPoly& p, const std::function<bool(VarId)>& coefficient_var);

}  // namespace pdo
