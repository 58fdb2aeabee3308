#pragma once

#include <optional>
#include <span>
#include <vector>

#include "liecohom/gmod.hpp"

namespace liecohom {

/// Largest algebra dimension the tuple indexing supports.
inline constexpr Index max_algebra_dim = 24;

/// Sorts `seq` in place and returns the sign of the sorting permutation,
/// or 0 if `seq` contains a repeated index.
int sort_with_sign(std::vector<Index>& seq);

/// Position of an increasing k-tuple of {0..n-1} in lexicographic order.
Index lex_rank(Index n, std::span<const Index> sorted);

Index binomial(Index n, Index k);

/// The increasing index tuples of length k over {0..n-1}, lexicographically ordered.
class TupleBasis {
public:
    TupleBasis(Index n, Index k);

    Index n() const { return n_; }
    Index k() const { return k_; }
    Index size() const { return size_; }
    std::span<const Index> tuple(Index t) const
    {
        return {flat_.data() + t * k_, static_cast<std::size_t>(k_)};
    }
    Index index_of(std::span<const Index> sorted) const { return lex_rank(n_, sorted); }

private:
    Index n_, k_, size_;
    std::vector<Index> flat_;
};

/// The cochain space A^k(g;V) = Hom(∧^k g, V), optionally cut down to the
/// relative subspace A^k(g,h;V).
///
/// Coordinates are ordered tuple-major: coordinate t·vdim + a is the a-th
/// component of the value on the t-th increasing tuple.
class CochainLevel {
public:
    CochainLevel(GModule module, Index degree);
    CochainLevel(GModule module, Index degree, const Subalgebra& h);

    const GModule& module() const { return module_; }
    const LieAlgebra& algebra() const { return module_.algebra(); }
    Index degree() const { return degree_; }
    Index space_dim() const { return binomial(algebra().dim(), degree_) * module_.vdim(); }
    bool is_relative() const { return relative_basis_.has_value(); }
    /// Columns span the relative subspace (identity for an absolute level).
    Matrix basis() const;
    /// Dimension of the (relative) level.
    Index dim() const { return relative_basis_ ? relative_basis_->cols() : space_dim(); }

private:
    GModule module_;
    Index degree_;
    std::optional<Matrix> relative_basis_;
};

/// A V-valued k-form given by its values on increasing tuples.
struct Cochain {
    Index algebra_dim = 0;
    Index vdim = 1;
    Index degree = 0;
    Vector coords;

    /// Value on an arbitrary argument tuple, extended antisymmetrically.
    Vector evaluate(std::vector<Index> args) const;
    /// Value of a scalar-valued form.
    Rational evaluate_scalar(std::vector<Index> args) const { return evaluate(std::move(args))(0); }
};

/// e*_{i1} ∧ … ∧ e*_{ik} with trivial scalar values, i.e. the form equal to
/// 1 on (e_{i1}, …, e_{ik}).
Cochain basic_form(Index algebra_dim, std::vector<Index> indices);

/// δ_k : A^k(g;V) → A^{k+1}(g;V) built from the two-sum formula.
Matrix differential_matrix(const GModule& v, Index k);

/// i_X : A^k(g;V) → A^{k−1}(g;V). For k = 0 the result has zero rows.
Matrix interior_product_matrix(const GModule& v, Index k, const Vector& x);

/// L_X : A^k(g;V) → A^k(g;V).
Matrix lie_derivative_matrix(const GModule& v, Index k, const Vector& x);

/// ω ↦ e*_i ∧ ω from A^k(g;V) to A^{k+1}(g;V).
Matrix wedge_dual_matrix(const GModule& v, Index k, Index i);

/// J : A^k(g) → A^{k−1}(g; g*), (Jω)(X_1..X_{k−1})(X) = ω(X, X_1..X_{k−1}).
/// Requires 1 ≤ k ≤ dim g.
Matrix j_map_matrix(const LieAlgebra& g, Index k);

/// Canonical basis (as columns) of the forms killed by i_b and L_b for every
/// basis vector b of h.
Matrix relative_subspace(const GModule& v, Index k, const Subalgebra& h);

} // namespace liecohom
