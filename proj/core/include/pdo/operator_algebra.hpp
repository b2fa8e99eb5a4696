#pragma once

#include <optional>
#include <vector>

#include "pdo/diffop.hpp"

namespace pdo {

/// a ∘ b under the Leibniz rule D_i f = f D_i + f_{x_i}.
DiffOp compose(const DiffOp& a, const DiffOp& b);
/// a^k by repeated composition; a^0 is the identity.
DiffOp power(const DiffOp& a, unsigned k);
DiffOp commutator(const DiffOp& a, const DiffOp& b);

/// a[f] where D_i acts on the coefficient as r -> r_{x_i} + z_i r.
ExpFunction apply(const DiffOp& a, const ExpFunction& f);
/// d/dz_i of f, i.e. coeff -> coeff_{z_i} + x_i coeff.
ExpFunction z_derivative(const ExpFunction& f, std::size_t i);

/// The operator Q with Q ∘ k = t, if one exists. Solved by eliminating the
/// leading term of the remainder, which is triangular in the unknown
/// coefficients. ZeroDivisor when k = 0.
std::optional<DiffOp> right_divide(const DiffOp& t, const DiffOp& k);

/// The operator L with L ∘ k = k ∘ p (so L = k p k^-1), provided it is a
/// differential operator of order at most ansatz_order.
std::optional<DiffOp> conjugate_through(const DiffOp& p, const DiffOp& k, int ansatz_order);

/// Substitutes ops[i-1] for mu_i in p. Coefficients of the mu-monomials
/// (which may involve x) multiply on the left. The operators must commute
/// pairwise, otherwise NonCommutingOperators.
DiffOp eval_poly_at_operators(const MultiPoly& p, const std::vector<DiffOp>& ops);

bool is_constant_coefficient(const DiffOp& a);

/// D_i -> z_i for a constant-coefficient operator; NonConstantInput
/// otherwise.
MultiPoly symbol(const DiffOp& a);

/// True when all pairwise commutators vanish.
bool mutually_commute(const std::vector<DiffOp>& ops);

}  // namespace pdo
