#include "liecohom/cohomology.hpp"

namespace liecohom {

Complex::Complex(const GModule& v, const std::optional<Subalgebra>& h)
    : Complex(v, h, 0, v.algebra().dim())
{
}

Complex::Complex(const GModule& v, const std::optional<Subalgebra>& h, Index lo, Index hi)
    : module_(v), relative_(h.has_value()), lo_(lo), hi_(hi)
{
    const Index n = v.algebra().dim();
    if (lo < 0 || hi > n || lo > hi)
        throw DegreeOutOfRange("degree window " + std::to_string(lo) + ".." + std::to_string(hi) + " outside 0.."
                               + std::to_string(n));
    if (h && !(h->ambient() == v.algebra()))
        throw MixedAlgebras("subalgebra lives in a different algebra than the module");

    const auto size = static_cast<std::size_t>(n + 1);
    bases_.resize(size);
    differentials_.resize(size);
    ranks_.assign(size, 0);

    const Index first = std::max<Index>(lo - 1, 0);
    const Index last = std::min<Index>(hi + 1, n);
    for (Index k = first; k <= last; ++k)
        bases_[static_cast<std::size_t>(k)] = h ? relative_subspace(v, k, *h) : Matrix();

    for (Index k = first; k <= std::min(hi, n); ++k) {
        const Matrix delta = differential_matrix(v, k);
        Matrix restricted;
        if (!h) {
            restricted = delta;
        } else if (k == n) {
            restricted = Matrix::Zero(0, level_dim(k));
        } else {
            // Throws SubspaceNotContained if δ leaves the relative subcomplex.
            restricted = solve_in_span(level_basis(k + 1), product(delta, level_basis(k)));
        }
        ranks_[static_cast<std::size_t>(k)] = rank(restricted);
        differentials_[static_cast<std::size_t>(k)] = std::move(restricted);
    }
}

const Matrix& Complex::level_basis(Index k) const
{
    if (k < std::max<Index>(lo_ - 1, 0) || k > std::min(hi_ + 1, top_degree()))
        throw DegreeOutOfRange("level " + std::to_string(k) + " was not built");
    if (!relative_)
        throw ValidationError("absolute levels use the identity basis; call level_dim instead");
    return bases_[static_cast<std::size_t>(k)];
}

Index Complex::level_dim(Index k) const
{
    if (relative_)
        return level_basis(k).cols();
    return binomial(top_degree(), k) * module_.vdim();
}

const Matrix& Complex::restricted_differential(Index k) const
{
    if (k < std::max<Index>(lo_ - 1, 0) || k > hi_)
        throw DegreeOutOfRange("differential " + std::to_string(k) + " was not built");
    return differentials_[static_cast<std::size_t>(k)];
}

Index Complex::differential_rank(Index k) const
{
    if (k < 0)
        return 0;
    restricted_differential(k);
    return ranks_[static_cast<std::size_t>(k)];
}

Index Complex::betti(Index k) const
{
    if (!in_window(k))
        throw DegreeOutOfRange("degree " + std::to_string(k) + " outside the computed window");
    return level_dim(k) - differential_rank(k) - differential_rank(k - 1);
}

CohomologyResult Complex::cohomology(Index k, bool with_representatives) const
{
    CohomologyResult result;
    result.degree = k;
    result.betti = betti(k);
    result.relative = relative_;
    result.module_spec = module_.label();
    if (!with_representatives || result.betti == 0)
        return result;

    const Matrix cocycles = kernel_matrix(restricted_differential(k));
    const Matrix boundaries = k > 0 ? restricted_differential(k - 1) : Matrix(level_dim(k), 0);
    // Cocycles that raise the rank over the coboundaries, in kernel order.
    const auto e = rref(hstack(boundaries, cocycles));
    const Index n = top_degree();
    for (const Index p : e.pivots) {
        if (p < boundaries.cols())
            continue;
        Vector local = cocycles.col(p - boundaries.cols());
        Vector full = relative_ ? Vector(product(level_basis(k), local)) : local;
        result.representatives.push_back(Cochain{n, module_.vdim(), k, std::move(full)});
    }
    return result;
}

CohomologyResult cohomology(const GModule& v, Index k, const std::optional<Subalgebra>& h, bool with_representatives)
{
    return Complex(v, h, k, k).cohomology(k, with_representatives);
}

std::vector<Index> betti_numbers(const GModule& v, const std::optional<Subalgebra>& h)
{
    const Index top = v.algebra().dim() - (h ? h->dim() : 0);
    const Complex c(v, h, 0, top);
    std::vector<Index> out;
    for (Index k = 0; k <= top; ++k)
        out.push_back(c.betti(k));
    return out;
}

KillingThreeForm killing_three_form(const LieAlgebra& g)
{
    if (!is_semisimple(g))
        throw NotSemisimple("the Killing 3-form class is only defined here for semisimple algebras");
    const Index n = g.dim();
    const Matrix b = killing_form(g);
    const TupleBasis triples(n, 3);
    Vector coords = Vector::Zero(triples.size());
    for (Index t = 0; t < triples.size(); ++t) {
        const auto ijk = triples.tuple(t);
        coords(t) = (g.bracket_basis(ijk[0], ijk[1]).transpose() * b.col(ijk[2]))(0);
    }
    KillingThreeForm out{Cochain{n, 1, 3, coords}};
    const GModule trivial = trivial_module(g);
    out.closed = is_zero(product(differential_matrix(trivial, 3), coords));
    const Matrix d2 = differential_matrix(trivial, 2);
    out.class_nonzero = rank(hstack(d2, coords)) > rank(d2);
    return out;
}

VolumeForm invariant_volume_form(const Subalgebra& h)
{
    const LieAlgebra& g = h.ambient();
    VolumeForm out;
    out.top_degree = g.dim() - h.dim();
    const Matrix basis = relative_subspace(trivial_module(g), out.top_degree, h);
    out.dim_top_relative = basis.cols();
    if (out.dim_top_relative == 1)
        out.form = Cochain{g.dim(), 1, out.top_degree, basis.col(0)};
    return out;
}

DualityReport duality_report(const Subalgebra& h, const GModule& v, Index k)
{
    const Index n = h.ambient().dim() - h.dim();
    if (k < 0 || k > n)
        throw DegreeOutOfRange("duality degree " + std::to_string(k) + " outside 0.." + std::to_string(n));
    DualityReport r;
    r.left = Complex(v, h, k, k).betti(k);
    r.right = Complex(dual_module(v), h, n - k, n - k).betti(n - k);
    r.equal = r.left == r.right;
    return r;
}

} // namespace liecohom
