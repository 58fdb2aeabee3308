#pragma once

#include <string>
#include <vector>

#include "liecohom/liealg.hpp"

namespace liecohom {

/// Finite-dimensional module over a Lie algebra: one vdim × vdim action
/// matrix per basis vector of the algebra.
class GModule {
public:
    /// Validates ρ([e_i, e_j]) = ρ(e_i)ρ(e_j) − ρ(e_j)ρ(e_i) for all i < j.
    /// Throws DimensionMismatch or ModuleAxiomViolation.
    static GModule make(const LieAlgebra& g, std::vector<Matrix> actions, std::string label = "explicit");

    /// Skips the module-axiom check. Only for mutation experiments that need
    /// a deliberately wrong action family.
    static GModule unchecked(const LieAlgebra& g, std::vector<Matrix> actions, std::string label);

    const LieAlgebra& algebra() const { return algebra_; }
    Index vdim() const { return vdim_; }
    const std::string& label() const { return label_; }

    const Matrix& action_basis(Index i) const { return actions_[static_cast<std::size_t>(i)]; }
    const std::vector<Matrix>& actions() const { return actions_; }
    /// Action of a general element (linear extension).
    Matrix action(const Vector& x) const;

    /// Throws ModuleAxiomViolation if the action family is not a homomorphism.
    void check_axiom() const;

    friend bool operator==(const GModule& a, const GModule& b)
    {
        return a.algebra_ == b.algebra_ && a.vdim_ == b.vdim_ && a.actions_ == b.actions_;
    }

private:
    GModule(LieAlgebra g, Index vdim, std::vector<Matrix> actions, std::string label)
        : algebra_(std::move(g)), vdim_(vdim), actions_(std::move(actions)), label_(std::move(label))
    {
    }

    LieAlgebra algebra_;
    Index vdim_;
    std::vector<Matrix> actions_;
    std::string label_;
};

/// Sign convention for the action on g*.
enum class CoadjointSign {
    /// X·ω = ω([·, X]), i.e. the matrix −ad(X)ᵀ. The default everywhere.
    NegativeTranspose,
    /// ω ↦ ω ∘ ad(X), the matrix +ad(X)ᵀ. Not a homomorphism; mutation tests only.
    Transpose,
};

GModule trivial_module(const LieAlgebra& g, Index n = 1);
GModule adjoint_module(const LieAlgebra& g);
GModule coadjoint_module(const LieAlgebra& g, CoadjointSign sign = CoadjointSign::NegativeTranspose);
/// Action X ↦ −ρ(X)ᵀ on the dual space.
GModule dual_module(const GModule& m);
/// Block-diagonal sum. Throws MixedAlgebras when the modules live over different algebras.
GModule direct_sum(const std::vector<GModule>& modules);

} // namespace liecohom
