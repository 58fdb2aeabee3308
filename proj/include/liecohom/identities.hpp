#pragma once

#include "liecohom/cecomplex.hpp"

namespace liecohom {

// Exact operator identities on the cochain complex, each checked at one degree.

/// δ_{k+1} δ_k = 0.
bool delta_squared_holds(const GModule& v, Index k);

/// L_X = δ i_X + i_X δ on A^k(g;V).
bool cartan_holds(const GModule& v, Index k, const Vector& x);

/// 2 d ω = Σ_i e*_i ∧ L_{e_i} ω on A^k(g).
bool delta_prime_holds(const LieAlgebra& g, Index k);

/// d on 1-forms equals ω ↦ Σ_{i<j} ω([e_j, e_i]) e*_i ∧ e*_j.
bool delta_one_holds(const LieAlgebra& g);

/// δ J = −J d on A^k(g), with g* carrying the given coadjoint convention.
bool j_delta_holds(const LieAlgebra& g, Index k, CoadjointSign sign = CoadjointSign::NegativeTranspose);

/// i_X J = −J i_X on A^k(g).
bool j_interior_holds(const LieAlgebra& g, Index k, const Vector& x,
                      CoadjointSign sign = CoadjointSign::NegativeTranspose);

/// L_X J = J L_X on A^k(g).
bool j_lie_holds(const LieAlgebra& g, Index k, const Vector& x, CoadjointSign sign = CoadjointSign::NegativeTranspose);

} // namespace liecohom
