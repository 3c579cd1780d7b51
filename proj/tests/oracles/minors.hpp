#pragma once

#include <vector>

#include "tdual/abelian/int_matrix.hpp"

namespace oracle {

// Determinant by cofactor expansion (small matrices only).
tdual::Int laplace_determinant(const tdual::IntMatrix& m);

// Nonzero invariant factors from determinantal divisors:
// d_k = D_k / D_{k-1}, D_k = gcd of all k x k minors.
std::vector<tdual::Int> invariant_factors_by_minors(const tdual::IntMatrix& m);

}  // namespace oracle
