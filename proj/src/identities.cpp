#include "liecohom/identities.hpp"

namespace liecohom {

bool delta_squared_holds(const GModule& v, Index k)
{
    if (k + 2 > v.algebra().dim())
        return true;
    return is_zero(product(differential_matrix(v, k + 1), differential_matrix(v, k)));
}

bool cartan_holds(const GModule& v, Index k, const Vector& x)
{
    const Index n = v.algebra().dim();
    const Matrix lhs = lie_derivative_matrix(v, k, x);
    Matrix rhs = Matrix::Zero(lhs.rows(), lhs.cols());
    if (k >= 1)
        rhs += product(differential_matrix(v, k - 1), interior_product_matrix(v, k, x));
    if (k < n)
        rhs += product(interior_product_matrix(v, k + 1, x), differential_matrix(v, k));
    return lhs == rhs;
}

bool delta_prime_holds(const LieAlgebra& g, Index k)
{
    const GModule trivial = trivial_module(g);
    const Matrix d = differential_matrix(trivial, k);
    Matrix rhs = Matrix::Zero(d.rows(), d.cols());
    for (Index i = 0; i < g.dim(); ++i)
        rhs += product(wedge_dual_matrix(trivial, k, i), lie_derivative_matrix(trivial, k, g.basis_vector(i)));
    return Matrix(Rational(2) * d) == rhs;
}

bool delta_one_holds(const LieAlgebra& g)
{
    const Index n = g.dim();
    if (n < 1)
        return true;
    const Matrix d = differential_matrix(trivial_module(g), 1);
    // Row for the pair (i, j), i < j, in lexicographic order; column m is the
    // coefficient ω(e_m) contributes through ω([e_j, e_i]).
    Matrix expected = Matrix::Zero(d.rows(), n);
    Index row = 0;
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j, ++row)
            expected.row(row) = g.bracket_basis(j, i).transpose();
    return d == expected;
}

bool j_delta_holds(const LieAlgebra& g, Index k, CoadjointSign sign)
{
    const Index n = g.dim();
    const GModule coad = coadjoint_module(g, sign);
    const Matrix lhs = product(differential_matrix(coad, k - 1), j_map_matrix(g, k));
    if (k == n)
        return is_zero(lhs);
    const Matrix rhs = -product(j_map_matrix(g, k + 1), differential_matrix(trivial_module(g), k));
    return lhs == rhs;
}

bool j_interior_holds(const LieAlgebra& g, Index k, const Vector& x, CoadjointSign sign)
{
    if (k < 2)
        return true;
    const GModule coad = coadjoint_module(g, sign);
    const Matrix lhs = product(interior_product_matrix(coad, k - 1, x), j_map_matrix(g, k));
    const Matrix rhs = -product(j_map_matrix(g, k - 1), interior_product_matrix(trivial_module(g), k, x));
    return lhs == rhs;
}

bool j_lie_holds(const LieAlgebra& g, Index k, const Vector& x, CoadjointSign sign)
{
    const GModule coad = coadjoint_module(g, sign);
    const Matrix lhs = product(lie_derivative_matrix(coad, k - 1, x), j_map_matrix(g, k));
    const Matrix rhs = product(j_map_matrix(g, k), lie_derivative_matrix(trivial_module(g), k, x));
    return lhs == rhs;
}

} // namespace liecohom
