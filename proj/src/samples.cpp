#include "liecohom/samples.hpp"

#include "liecohom/extensions.hpp"

namespace liecohom {

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Product of random elementary integer matrices; determinant ±1.
Matrix random_unimodular(Rng& rng, Index n)
{
    Matrix p = Matrix::Identity(n, n);
    if (n < 2)
        return uniform(rng, 0, 1) ? Matrix(-p) : p;
    for (int step = 0; step < 2 * n; ++step) {
        const Index i = uniform(rng, 0, n - 1);
        Index j = uniform(rng, 0, n - 2);
        if (j >= i)
            ++j;
        const Rational c(uniform(rng, -2, 2));
        p.col(i) += c * p.col(j);
    }
    return p;
}

Vector random_vector(Rng& rng, Index n, long bound)
{
    Vector v(n);
    for (Index i = 0; i < n; ++i)
        v(i) = Rational(uniform(rng, -bound, bound));
    return v;
}

LieAlgebra random_algebra(Rng& rng, Index max_dim, std::string& description)
{
    switch (uniform(rng, 0, 2)) {
    case 0: {
        static const char* const names[] = {"sl2", "so3", "heis3", "abelian:2", "abelian:4", "sl2R_ext"};
        const std::string name = names[uniform(rng, 0, 5)];
        const LieAlgebra g = builtin(name).algebra;
        description = name + " in a random unimodular basis";
        return transport(g, random_unimodular(rng, g.dim()));
    }
    case 1: {
        const Index m = uniform(rng, 1, max_dim - 1);
        Matrix a(m, m);
        for (Index i = 0; i < m; ++i)
            for (Index j = 0; j < m; ++j)
                a(i, j) = Rational(uniform(rng, -2, 2));
        description = "R x_A R^" + std::to_string(m);
        return semidirect_line(a);
    }
    default: {
        static const char* const left[] = {"sl2", "so3", "heis3"};
        const std::string name = left[uniform(rng, 0, 2)];
        const Index extra = uniform(rng, 1, max_dim - 3);
        description = name + " + abelian:" + std::to_string(extra);
        return direct_sum_algebra(builtin(name).algebra, builtin("abelian:" + std::to_string(extra)).algebra);
    }
    }
}

GModule random_module(Rng& rng, const LieAlgebra& g)
{
    switch (uniform(rng, 0, 5)) {
    case 0:
        return trivial_module(g);
    case 1:
        return trivial_module(g, 2);
    case 2:
        return adjoint_module(g);
    case 3:
        return coadjoint_module(g);
    case 4:
        return direct_sum({trivial_module(g), adjoint_module(g)});
    default:
        return dual_module(direct_sum({adjoint_module(g), trivial_module(g)}));
    }
}

} // namespace

LieAlgebra transport(const LieAlgebra& g, const Matrix& change)
{
    const Index n = g.dim();
    if (change.rows() != n || change.cols() != n)
        throw DimensionMismatch("change of basis must be square of the algebra dimension");
    BracketTable table;
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
            const Vector w = g.bracket(change.col(i), change.col(j));
            table[{i, j}] = Vector(solve_in_span(change, w));
        }
    std::vector<std::string> names;
    for (Index i = 0; i < n; ++i)
        names.push_back("f" + std::to_string(i + 1));
    return LieAlgebra::validate(std::move(names), table);
}

LieAlgebra direct_sum_algebra(const LieAlgebra& a, const LieAlgebra& b)
{
    const Index na = a.dim();
    const Index n = na + b.dim();
    BracketTable table;
    for (const auto& [pair, value] : a.brackets()) {
        Vector v = Vector::Zero(n);
        v.head(na) = value;
        table[pair] = v;
    }
    for (const auto& [pair, value] : b.brackets()) {
        Vector v = Vector::Zero(n);
        v.tail(b.dim()) = value;
        table[{pair.first + na, pair.second + na}] = v;
    }
    std::vector<std::string> names = a.basis_names();
    for (const auto& s : b.basis_names())
        names.push_back(s + "'");
    return LieAlgebra::validate(std::move(names), table);
}

LieAlgebra semidirect_line(const Matrix& action)
{
    const Index m = action.rows();
    BracketTable table;
    for (Index i = 0; i < m; ++i) {
        Vector v = Vector::Zero(m + 1);
        v.tail(m) = action.col(i);
        table[{0, i + 1}] = v;
    }
    std::vector<std::string> names{"t"};
    for (Index i = 0; i < m; ++i)
        names.push_back("v" + std::to_string(i + 1));
    return LieAlgebra::validate(std::move(names), table);
}

std::vector<IdentitySample> identity_samples(std::size_t count, std::uint64_t seed, Index max_dim)
{
    if (max_dim < 4)
        throw ValidationError("identity samples need max_dim >= 4");
    Rng rng(seed);
    std::vector<IdentitySample> out;
    out.reserve(count);
    while (out.size() < count) {
        std::string description;
        const LieAlgebra g = random_algebra(rng, max_dim, description);
        if (g.dim() > max_dim)
            continue;
        GModule v = random_module(rng, g);
        const Index k = uniform(rng, 0, g.dim());
        Vector x = random_vector(rng, g.dim(), 3);
        description += ", " + v.label() + ", degree " + std::to_string(k);
        out.push_back(IdentitySample{std::move(description), std::move(v), k, std::move(x)});
    }
    return out;
}

} // namespace liecohom
