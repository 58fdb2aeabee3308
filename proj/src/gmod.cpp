#include "liecohom/gmod.hpp"

#include <sstream>

namespace liecohom {

GModule GModule::make(const LieAlgebra& g, std::vector<Matrix> actions, std::string label)
{
    GModule m = unchecked(g, std::move(actions), std::move(label));
    m.check_axiom();
    return m;
}

GModule GModule::unchecked(const LieAlgebra& g, std::vector<Matrix> actions, std::string label)
{
    if (static_cast<Index>(actions.size()) != g.dim())
        throw DimensionMismatch("module needs one action matrix per basis vector: got "
                                + std::to_string(actions.size()) + ", expected " + std::to_string(g.dim()));
    const Index vdim = actions.empty() ? 0 : actions.front().rows();
    for (const auto& a : actions)
        if (a.rows() != vdim || a.cols() != vdim)
            throw DimensionMismatch("action matrices must all be square of the same size");
    return GModule(g, vdim, std::move(actions), std::move(label));
}

Matrix GModule::action(const Vector& x) const
{
    if (x.size() != algebra_.dim())
        throw DimensionMismatch("element has wrong length for module action");
    Matrix a = Matrix::Zero(vdim_, vdim_);
    for (Index i = 0; i < x.size(); ++i)
        if (!x(i).is_zero())
            a += x(i) * action_basis(i);
    return a;
}

void GModule::check_axiom() const
{
    const Index n = algebra_.dim();
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
            const Matrix residual = action(algebra_.bracket_basis(i, j))
                                    - (product(action_basis(i), action_basis(j))
                                       - product(action_basis(j), action_basis(i)));
            if (!is_zero(residual)) {
                std::ostringstream os;
                os << "[";
                for (Index r = 0; r < residual.rows(); ++r) {
                    os << (r ? "; " : "");
                    for (Index c = 0; c < residual.cols(); ++c)
                        os << (c ? " " : "") << residual(r, c);
                }
                os << "]";
                throw ModuleAxiomViolation(i, j, os.str());
            }
        }
}

GModule trivial_module(const LieAlgebra& g, Index n)
{
    std::vector<Matrix> actions(static_cast<std::size_t>(g.dim()), Matrix::Zero(n, n));
    return GModule::make(g, std::move(actions), n == 1 ? "trivial" : "trivial:" + std::to_string(n));
}

GModule adjoint_module(const LieAlgebra& g)
{
    std::vector<Matrix> actions;
    for (Index i = 0; i < g.dim(); ++i)
        actions.push_back(g.ad_basis(i));
    return GModule::make(g, std::move(actions), "adjoint");
}

GModule coadjoint_module(const LieAlgebra& g, CoadjointSign sign)
{
    // (X·ω)(e_b) = ω([e_b, X]) = −Σ_a ad(X)_{ab} ω_a.
    std::vector<Matrix> actions;
    for (Index i = 0; i < g.dim(); ++i)
        actions.push_back(sign == CoadjointSign::NegativeTranspose ? Matrix(-g.ad_basis(i).transpose())
                                                                   : Matrix(g.ad_basis(i).transpose()));
    if (sign == CoadjointSign::Transpose)
        return GModule::unchecked(g, std::move(actions), "coadjoint(+ad^T)");
    return GModule::make(g, std::move(actions), "coadjoint");
}

GModule dual_module(const GModule& m)
{
    std::vector<Matrix> actions;
    for (const auto& a : m.actions())
        actions.push_back(-a.transpose());
    return GModule::make(m.algebra(), std::move(actions), "dual:" + m.label());
}

GModule direct_sum(const std::vector<GModule>& modules)
{
    if (modules.empty())
        throw DimensionMismatch("direct sum of an empty module list");
    const LieAlgebra& g = modules.front().algebra();
    Index total = 0;
    std::string label = "sum:";
    for (std::size_t k = 0; k < modules.size(); ++k) {
        if (!(modules[k].algebra() == g))
            throw MixedAlgebras("direct sum of modules over different algebras");
        total += modules[k].vdim();
        label += (k ? "+" : "") + modules[k].label();
    }
    std::vector<Matrix> actions;
    for (Index i = 0; i < g.dim(); ++i) {
        Matrix a = Matrix::Zero(total, total);
        Index offset = 0;
        for (const auto& m : modules) {
            a.block(offset, offset, m.vdim(), m.vdim()) = m.action_basis(i);
            offset += m.vdim();
        }
        actions.push_back(std::move(a));
    }
    return GModule::make(g, std::move(actions), label);
}

} // namespace liecohom
