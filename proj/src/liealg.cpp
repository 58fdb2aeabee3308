#include "liecohom/liealg.hpp"

#include <sstream>

namespace liecohom {

namespace {

std::string format_vector(const Vector& v)
{
    std::ostringstream os;
    os << "(";
    for (Index i = 0; i < v.size(); ++i)
        os << (i ? ", " : "") << v(i);
    os << ")";
    return os.str();
}

} // namespace

std::size_t LieAlgebra::slot(Index i, Index j) const
{
    // Pairs (i, j), i < j, enumerated row by row.
    const Index n = dim();
    return static_cast<std::size_t>(i * n - i * (i + 1) / 2 + (j - i - 1));
}

LieAlgebra LieAlgebra::validate(std::vector<std::string> basis_names, const BracketTable& brackets)
{
    LieAlgebra g;
    g.names_ = std::move(basis_names);
    const Index n = g.dim();
    g.upper_.assign(static_cast<std::size_t>(n * (n - 1) / 2), Vector::Zero(n));
    for (const auto& [pair, value] : brackets) {
        const auto [i, j] = pair;
        if (i < 0 || j >= n || i >= j)
            throw DimensionMismatch("bracket key [" + std::to_string(i) + "," + std::to_string(j)
                                    + "] must satisfy 0 <= i < j < dim");
        if (value.size() != n)
            throw DimensionMismatch("bracket [" + std::to_string(i) + "," + std::to_string(j) + "] has length "
                                    + std::to_string(value.size()) + ", expected " + std::to_string(n));
        g.upper_[g.slot(i, j)] = value;
    }

    g.ad_.reserve(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        Matrix a = Matrix::Zero(n, n);
        for (Index j = 0; j < n; ++j)
            a.col(j) = g.bracket_basis(i, j);
        g.ad_.push_back(std::move(a));
    }

    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            for (Index k = j + 1; k < n; ++k) {
                const Vector residual = g.ad_basis(i) * g.bracket_basis(j, k) + g.ad_basis(j) * g.bracket_basis(k, i)
                                        + g.ad_basis(k) * g.bracket_basis(i, j);
                if (!is_zero(residual))
                    throw JacobiViolation(i, j, k, format_vector(residual));
            }
    return g;
}

Vector LieAlgebra::bracket_basis(Index i, Index j) const
{
    if (i == j)
        return Vector::Zero(dim());
    if (i < j)
        return upper_[slot(i, j)];
    return -upper_[slot(j, i)];
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const { return ad(x) * y; }

Matrix LieAlgebra::ad(const Vector& x) const
{
    if (x.size() != dim())
        throw DimensionMismatch("element has wrong length for ad");
    Matrix a = Matrix::Zero(dim(), dim());
    for (Index i = 0; i < dim(); ++i)
        if (!x(i).is_zero())
            a += x(i) * ad_basis(i);
    return a;
}

Vector LieAlgebra::basis_vector(Index i) const
{
    Vector v = Vector::Zero(dim());
    v(i) = Rational(1);
    return v;
}

BracketTable LieAlgebra::brackets() const
{
    BracketTable out;
    for (Index i = 0; i < dim(); ++i)
        for (Index j = i + 1; j < dim(); ++j)
            if (!is_zero(upper_[slot(i, j)]))
                out.emplace(std::pair{i, j}, upper_[slot(i, j)]);
    return out;
}

Subalgebra Subalgebra::make(const LieAlgebra& ambient, std::vector<Vector> vectors)
{
    const Matrix basis = columns_of(vectors, ambient.dim());
    if (rank(basis) != basis.cols())
        throw ValidationError("subalgebra vectors are linearly dependent");
    for (std::size_t a = 0; a < vectors.size(); ++a)
        for (std::size_t b = a + 1; b < vectors.size(); ++b) {
            const Vector w = ambient.bracket(vectors[a], vectors[b]);
            if (rank(hstack(basis, w)) > basis.cols())
                throw NotSubalgebra("span is not closed under the bracket: [v" + std::to_string(a) + ", v"
                                    + std::to_string(b) + "] = " + format_vector(w) + " leaves it");
        }
    return Subalgebra(ambient, std::move(vectors));
}

Subalgebra Subalgebra::zero(const LieAlgebra& ambient) { return Subalgebra(ambient, {}); }

Matrix Subalgebra::basis_matrix() const { return columns_of(vectors_, ambient_.dim()); }

Matrix killing_form(const LieAlgebra& g)
{
    const Index n = g.dim();
    Matrix b(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = i; j < n; ++j) {
            b(i, j) = product(g.ad_basis(i), g.ad_basis(j)).trace();
            b(j, i) = b(i, j);
        }
    return b;
}

LieAlgebra induced_algebra(const Subalgebra& sub)
{
    const auto& g = sub.ambient();
    const Matrix basis = sub.basis_matrix();
    const Index m = sub.dim();
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(m));
    for (Index i = 0; i < m; ++i)
        names.push_back("v" + std::to_string(i + 1));
    BracketTable table;
    for (Index i = 0; i < m; ++i)
        for (Index j = i + 1; j < m; ++j) {
            const Vector w = g.bracket(basis.col(i), basis.col(j));
            table.emplace(std::pair{i, j}, Vector(solve_in_span(basis, w)));
        }
    return LieAlgebra::validate(std::move(names), table);
}

std::vector<Vector> echelon_basis(const std::vector<Vector>& vectors, Index ambient_dim)
{
    const Matrix rows = columns_of(vectors, ambient_dim).transpose();
    const auto e = rref(rows);
    std::vector<Vector> out;
    for (Index r = 0; r < e.rank(); ++r)
        out.emplace_back(e.reduced.row(r).transpose());
    return out;
}

bool is_semisimple(const LieAlgebra& g)
{
    return rank(killing_form(g)) == g.dim();
}

StructureReport structure_report(const LieAlgebra& g)
{
    const Index n = g.dim();
    const Matrix kf = killing_form(g);
    const Index krank = rank(kf);

    // X is central iff ad(X) = 0, i.e. Σ_i x_i [e_i, e_j] = 0 for every j.
    Matrix center_system(n * n, n);
    for (Index i = 0; i < n; ++i)
        center_system.col(i) = g.ad_basis(i).reshaped();
    Subalgebra center = Subalgebra::make(g, kernel_basis(center_system));

    std::vector<Vector> brackets;
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            brackets.push_back(g.bracket_basis(i, j));
    Subalgebra derived = Subalgebra::make(g, echelon_basis(brackets, n));

    bool reductive = false;
    if (center.dim() + derived.dim() == n
        && rank(hstack(center.basis_matrix(), derived.basis_matrix())) == n)
        reductive = derived.dim() == 0 || is_semisimple(induced_algebra(derived));

    return StructureReport{
        .is_semisimple = krank == n,
        .is_reductive = reductive,
        .killing_rank = krank,
        .killing_determinant = determinant(kf),
        .center = std::move(center),
        .derived = std::move(derived),
    };
}

} // namespace liecohom
