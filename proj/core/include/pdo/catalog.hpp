#pragma once

#include <vector>

#include "pdo/diffop.hpp"

namespace pdo::catalog {

/// D1^2 - D2^2, x2 D1 + x1 D2 and L3 = L1 L2 - gamma L1. They commute and
/// satisfy mu3 - mu1 mu2 + gamma mu1 = 0.
std::vector<DiffOp> wave_boost_triple();
MultiPoly wave_boost_relation();

/// L1 = D1^2 - D2^2 - 1, L2 = D1 L1, L3 = D2 L1.
std::vector<DiffOp> klein_gordon_triple();
/// mu2^2 - mu3^2 - mu1^2 - mu1^3, the relation the triple does satisfy.
MultiPoly klein_gordon_relation();
/// mu2^2 - mu3^2 - mu1 - mu1^6, a relation it does not satisfy.
MultiPoly klein_gordon_sextic_relation();

/// The order-four operator L with L ∘ K = (D1 D2 - lambda)^3, entered term
/// by term in its expanded form.
DiffOp example_L_expanded();

/// D^2 and D^3 in one variable.
std::vector<DiffOp> ordinary_pair();

}  // namespace pdo::catalog
