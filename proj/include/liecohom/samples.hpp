#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "liecohom/gmod.hpp"

namespace liecohom {

/// Re-expresses g in the basis given by the columns of `change` (invertible).
LieAlgebra transport(const LieAlgebra& g, const Matrix& change);

/// g ⊕ k with the two factors commuting.
LieAlgebra direct_sum_algebra(const LieAlgebra& a, const LieAlgebra& b);

/// ℝ ⋉_A ℝ^m: basis (t, v_1..v_m) with [t, v_i] = A v_i.
LieAlgebra semidirect_line(const Matrix& action);

/// One randomized test case for the operator identities.
struct IdentitySample {
    std::string description;
    GModule module;
    Index degree = 0;
    Vector x;
};

/// Deterministic stream of validated (algebra, module, degree, X) samples
/// with dim g ≤ max_dim, built from catalog algebras under random
/// unimodular base changes, direct sums and random semidirect products.
std::vector<IdentitySample> identity_samples(std::size_t count, std::uint64_t seed, Index max_dim = 5);

} // namespace liecohom
