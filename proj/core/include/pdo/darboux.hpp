#pragma once

#include <vector>

#include "pdo/diffop.hpp"
#include "pdo/multipoly.hpp"

namespace pdo {

/// A claimed factorization p = left ∘ right of a constant-coefficient p.
struct FactorizationWitness {
  DiffOp p;
  DiffOp left;
  DiffOp right;
};

bool verify_factorization(const FactorizationWitness& w);

struct ExampleFactorization {
  DiffOp K;
  DiffOp L;
  DiffOp p;
};

/// The two-dimensional example p = (D1 D2 - lambda)^3 = L ∘ K with
/// K = x1 x2 (D1 D2 - lambda) ∘ 1/(x1 x2). lambda is the parameter variable.
ExampleFactorization build_example_K();

struct EigenPair {
  MultiPoly rho;    // in z and parameters
  Monomial sigma;   // in x
};

/// K[exp(x.z)] = (sum rho_a sigma_a / sigma0) exp(x.z), with g the gcd of the
/// rho_a and psi = K[exp]/g.
struct EigenfunctionData {
  MultiPoly sigma0;
  std::vector<EigenPair> pairs;
  MultiPoly g;
  ExpFunction psi;
};

EigenfunctionData normalized_eigenfunction(const DiffOp& k);

/// The ideal (z_i z_j - rhs).
struct SpectralConstraint {
  std::size_t i = 1;
  std::size_t j = 2;
  MultiPoly rhs;
};

/// Whether K∘q kills sigma0 exp(x.z) along the constraint curve. The x
/// denominators are cleared and each x-coefficient is reduced modulo the
/// constraint. NonConstantQ unless q has constant coefficients.
bool kernel_membership(const DiffOp& k, const DiffOp& q, const SpectralConstraint& c);

/// Whether (xy - lambda) divides q_x, q_y and q_xy.
bool rlambda_membership(const MultiPoly& q, VarId x, VarId y, const MultiPoly& lambda);

struct RLambdaDecomposition {
  MultiPoly g;
  MultiPoly c;  // constant in x and y; may involve lambda
};

/// q = g (xy - lambda)^3 + c. NotInRing when q fails membership,
/// DegenerateLambda when lambda = 0.
RLambdaDecomposition rlambda_decompose(const MultiPoly& q, VarId x, VarId y, const MultiPoly& lambda);

/// kernel_membership(K_example, q, z1 z2 = lambda) compared with
/// rlambda_membership(q(z1, z2), lambda); true when the two agree.
bool isom_check(const DiffOp& q, const MultiPoly& lambda);

}  // namespace pdo
