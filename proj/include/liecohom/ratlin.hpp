#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "liecohom/errors.hpp"
#include "liecohom/rational.hpp"

namespace liecohom {

using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowMatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Matrix = MatrixX<Rational>;
using Vector = VectorX<Rational>;

namespace detail {

template <typename Scalar>
inline bool is_zero(const Scalar& x)
{
    return x == Scalar(0);
}

inline bool is_zero(const Rational& x) { return x.is_zero(); }

template <typename Scalar>
inline std::size_t pivot_weight(const Scalar&)
{
    return 0;
}

inline std::size_t pivot_weight(const Rational& x) { return x.bit_weight(); }

/// Chooses the row in [from, rows) with a nonzero entry in `col` and the
/// smallest coefficient size. Returns -1 when the column is zero there.
template <typename Scalar>
Index choose_pivot(const RowMatrixX<Scalar>& a, Index from, Index col)
{
    Index best = -1;
    std::size_t best_weight = std::numeric_limits<std::size_t>::max();
    for (Index i = from; i < a.rows(); ++i) {
        if (is_zero(a(i, col)))
            continue;
        const std::size_t w = pivot_weight(a(i, col));
        if (w < best_weight) {
            best = i;
            best_weight = w;
        }
    }
    return best;
}

template <typename Scalar>
void swap_rows(RowMatrixX<Scalar>& a, Index i, Index j)
{
    if (i != j)
        a.row(i).swap(a.row(j));
}

/// Subtracts factor * row `src` from row `dst`, touching only the listed columns.
template <typename Scalar>
void axpy_row(RowMatrixX<Scalar>& a, Index dst, Index src, const Scalar& factor, const std::vector<Index>& support)
{
    for (const Index j : support)
        a(dst, j) -= factor * a(src, j);
}

template <typename Scalar>
std::vector<Index> row_support(const RowMatrixX<Scalar>& a, Index row, Index from_col)
{
    std::vector<Index> support;
    for (Index j = from_col; j < a.cols(); ++j)
        if (!is_zero(a(row, j)))
            support.push_back(j);
    return support;
}

} // namespace detail

/// Reduced row echelon form with the list of pivot columns.
template <typename Scalar>
struct Echelon {
    RowMatrixX<Scalar> reduced;
    std::vector<Index> pivots;

    Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <typename Derived>
Echelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    Echelon<Scalar> e;
    e.reduced = m;
    auto& a = e.reduced;
    Index row = 0;
    for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
        const Index p = detail::choose_pivot(a, row, col);
        if (p < 0)
            continue;
        detail::swap_rows(a, row, p);
        const Scalar inv = Scalar(1) / a(row, col);
        const auto support = detail::row_support(a, row, col);
        for (const Index j : support)
            a(row, j) *= inv;
        for (Index i = 0; i < a.rows(); ++i) {
            if (i == row || detail::is_zero(a(i, col)))
                continue;
            const Scalar factor = a(i, col);
            detail::axpy_row(a, i, row, factor, support);
        }
        e.pivots.push_back(col);
        ++row;
    }
    return e;
}

/// Rank over the scalar field by forward elimination.
template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    RowMatrixX<Scalar> a = m;
    Index row = 0;
    for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
        const Index p = detail::choose_pivot(a, row, col);
        if (p < 0)
            continue;
        detail::swap_rows(a, row, p);
        const auto support = detail::row_support(a, row, col);
        for (Index i = row + 1; i < a.rows(); ++i) {
            if (detail::is_zero(a(i, col)))
                continue;
            const Scalar factor = a(i, col) / a(row, col);
            detail::axpy_row(a, i, row, factor, support);
        }
        ++row;
    }
    return row;
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols())
        throw DimensionMismatch("determinant of a non-square matrix");
    RowMatrixX<Scalar> a = m;
    Scalar det(1);
    for (Index col = 0; col < a.cols(); ++col) {
        const Index p = detail::choose_pivot(a, col, col);
        if (p < 0)
            return Scalar(0);
        if (p != col) {
            detail::swap_rows(a, col, p);
            det = -det;
        }
        det *= a(col, col);
        const auto support = detail::row_support(a, col, col);
        for (Index i = col + 1; i < a.rows(); ++i) {
            if (detail::is_zero(a(i, col)))
                continue;
            const Scalar factor = a(i, col) / a(col, col);
            detail::axpy_row(a, i, col, factor, support);
        }
    }
    return det;
}

/// Kernel basis in canonical form: one vector per free column, with that
/// free variable set to 1 and the other free variables 0. Returned as the
/// columns of a cols x nullity matrix.
template <typename Derived>
MatrixX<typename Derived::Scalar> kernel_matrix(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    const auto e = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (const Index p : e.pivots)
        is_pivot[static_cast<std::size_t>(p)] = true;

    MatrixX<Scalar> k = MatrixX<Scalar>::Zero(m.cols(), m.cols() - e.rank());
    Index out = 0;
    for (Index f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)])
            continue;
        k(f, out) = Scalar(1);
        for (Index r = 0; r < e.rank(); ++r)
            if (!detail::is_zero(e.reduced(r, f)))
                k(e.pivots[static_cast<std::size_t>(r)], out) = -e.reduced(r, f);
        ++out;
    }
    return k;
}

template <typename Derived>
std::vector<VectorX<typename Derived::Scalar>> kernel_basis(const Eigen::MatrixBase<Derived>& m)
{
    const auto k = kernel_matrix(m);
    std::vector<VectorX<typename Derived::Scalar>> out;
    out.reserve(static_cast<std::size_t>(k.cols()));
    for (Index j = 0; j < k.cols(); ++j)
        out.emplace_back(k.col(j));
    return out;
}

/// Canonical basis of the column space: the nonzero rows of rref(mᵀ),
/// returned as columns.
template <typename Derived>
MatrixX<typename Derived::Scalar> column_space_basis(const Eigen::MatrixBase<Derived>& m)
{
    const auto e = rref(m.transpose());
    return e.reduced.topRows(e.rank()).transpose();
}

/// Stacks vectors as the columns of a matrix. `rows` is used when the list is empty.
template <typename Scalar>
MatrixX<Scalar> columns_of(const std::vector<VectorX<Scalar>>& vectors, Index rows)
{
    MatrixX<Scalar> m(rows, static_cast<Index>(vectors.size()));
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        if (vectors[j].size() != rows)
            throw DimensionMismatch("vector length differs from ambient dimension");
        m.col(static_cast<Index>(j)) = vectors[j];
    }
    return m;
}

template <typename DerivedA, typename DerivedB>
MatrixX<typename DerivedA::Scalar> hstack(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b)
{
    if (a.rows() != b.rows())
        throw DimensionMismatch("hstack of matrices with different row counts");
    MatrixX<typename DerivedA::Scalar> out(a.rows(), a.cols() + b.cols());
    out << a, b;
    return out;
}

template <typename DerivedA, typename DerivedB>
MatrixX<typename DerivedA::Scalar> vstack(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b)
{
    if (a.cols() != b.cols())
        throw DimensionMismatch("vstack of matrices with different column counts");
    MatrixX<typename DerivedA::Scalar> out(a.rows() + b.rows(), a.cols());
    out << a, b;
    return out;
}

/// dim span(big) − dim span(small), after checking span(small) ⊆ span(big).
template <typename Scalar>
Index quotient_dim(const std::vector<VectorX<Scalar>>& big, const std::vector<VectorX<Scalar>>& small)
{
    Index ambient = 0;
    if (!big.empty())
        ambient = big.front().size();
    else if (!small.empty())
        ambient = small.front().size();
    const auto b = columns_of(big, ambient);
    const auto s = columns_of(small, ambient);
    const Index rb = rank(b);
    if (rank(hstack(b, s)) > rb)
        throw SubspaceNotContained("quotient_dim: small span is not contained in big span");
    return rb - rank(s);
}

/// Solves basis · X = targets for X, where basis has full column rank.
/// Throws SubspaceNotContained if some target column leaves the span.
template <typename DerivedA, typename DerivedB>
MatrixX<typename DerivedA::Scalar> solve_in_span(const Eigen::MatrixBase<DerivedA>& basis,
                                                 const Eigen::MatrixBase<DerivedB>& targets)
{
    using Scalar = typename DerivedA::Scalar;
    const Index m = basis.cols();
    const auto e = rref(hstack(basis, targets));
    if (e.rank() != m || std::any_of(e.pivots.begin(), e.pivots.end(), [m](Index p) { return p >= m; }))
        throw SubspaceNotContained("target vectors are not in the span of the basis (or basis is dependent)");
    MatrixX<Scalar> x = e.reduced.block(0, m, m, targets.cols());
    return x;
}

/// Dense product that skips zero entries; the cochain operators are very sparse.
template <typename DerivedA, typename DerivedB>
MatrixX<typename DerivedA::Scalar> product(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b)
{
    using Scalar = typename DerivedA::Scalar;
    if (a.cols() != b.rows())
        throw DimensionMismatch("product of incompatible matrices");
    RowMatrixX<Scalar> out = RowMatrixX<Scalar>::Zero(a.rows(), b.cols());
    const RowMatrixX<Scalar> rb = b;
    std::vector<std::vector<Index>> b_support(static_cast<std::size_t>(rb.rows()));
    for (Index k = 0; k < rb.rows(); ++k)
        b_support[static_cast<std::size_t>(k)] = detail::row_support(rb, k, 0);
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (detail::is_zero(aik))
                continue;
            for (const Index j : b_support[static_cast<std::size_t>(k)])
                out(i, j) += aik * rb(k, j);
        }
    }
    return out;
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m)
{
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (!detail::is_zero(m(i, j)))
                return false;
    return true;
}

/// Integer-valued matrix literal helper for tests and catalog data.
inline Matrix to_rational(const Eigen::MatrixXi& m) { return m.cast<Rational>(); }

} // namespace liecohom
