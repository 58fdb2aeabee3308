#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liecohom/ratlin.hpp"

namespace liecohom {

/// Sparse bracket input: (i, j) with i < j mapped to the coordinates of [e_i, e_j].
/// Absent pairs bracket to zero.
using BracketTable = std::map<std::pair<Index, Index>, Vector>;

/// Finite-dimensional Lie algebra over ℚ given by structure constants.
///
/// Only the brackets [e_i, e_j] with i < j are stored; the rest follow by
/// antisymmetry. Instances are only produced by validate(), so the Jacobi
/// identity always holds.
class LieAlgebra {
public:
    /// Builds and checks the algebra. Throws DimensionMismatch for malformed
    /// tables and JacobiViolation for the first failing triple i < j < k.
    static LieAlgebra validate(std::vector<std::string> basis_names, const BracketTable& brackets);

    Index dim() const { return static_cast<Index>(names_.size()); }
    const std::vector<std::string>& basis_names() const { return names_; }

    /// [e_i, e_j] for arbitrary i, j.
    Vector bracket_basis(Index i, Index j) const;
    Vector bracket(const Vector& x, const Vector& y) const;

    /// Matrix of Y ↦ [e_i, Y].
    const Matrix& ad_basis(Index i) const { return ad_[static_cast<std::size_t>(i)]; }
    /// Matrix of Y ↦ [X, Y].
    Matrix ad(const Vector& x) const;

    Vector basis_vector(Index i) const;

    /// The stored (i < j) brackets that are nonzero.
    BracketTable brackets() const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b)
    {
        return a.names_ == b.names_ && a.upper_ == b.upper_;
    }

private:
    LieAlgebra() = default;
    std::size_t slot(Index i, Index j) const;

    std::vector<std::string> names_;
    std::vector<Vector> upper_; // [e_i, e_j], i < j, row-major over pairs
    std::vector<Matrix> ad_;
};

/// A linearly independent set of vectors in an ambient algebra whose span is
/// closed under the bracket.
class Subalgebra {
public:
    /// Throws DimensionMismatch, ValidationError (dependent vectors) or NotSubalgebra.
    static Subalgebra make(const LieAlgebra& ambient, std::vector<Vector> vectors);
    static Subalgebra zero(const LieAlgebra& ambient);

    const LieAlgebra& ambient() const { return ambient_; }
    const std::vector<Vector>& vectors() const { return vectors_; }
    Index dim() const { return static_cast<Index>(vectors_.size()); }
    /// The vectors as columns of an ambient-dim × dim matrix.
    Matrix basis_matrix() const;

private:
    Subalgebra(LieAlgebra ambient, std::vector<Vector> vectors)
        : ambient_(std::move(ambient)), vectors_(std::move(vectors))
    {
    }

    LieAlgebra ambient_;
    std::vector<Vector> vectors_;
};

/// B(X, Y) = tr(ad X · ad Y) in the algebra's basis.
Matrix killing_form(const LieAlgebra& g);

/// The subalgebra's own brackets, expressed in the basis sub.vectors().
LieAlgebra induced_algebra(const Subalgebra& sub);

/// Span of the vectors in canonical echelon form (rows of the rref).
std::vector<Vector> echelon_basis(const std::vector<Vector>& vectors, Index ambient_dim);

struct StructureReport {
    bool is_semisimple = false;
    bool is_reductive = false;
    Index killing_rank = 0;
    Rational killing_determinant;
    Subalgebra center;
    Subalgebra derived;
};

/// Cartan-criterion semisimplicity, center, derived algebra and reductivity.
StructureReport structure_report(const LieAlgebra& g);

bool is_semisimple(const LieAlgebra& g);

} // namespace liecohom
