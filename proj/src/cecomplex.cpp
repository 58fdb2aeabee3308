#include "liecohom/cecomplex.hpp"

namespace liecohom {

namespace {

void check_dim(Index n)
{
    if (n > max_algebra_dim)
        throw DimensionMismatch("algebra dimension " + std::to_string(n) + " exceeds the supported maximum "
                                + std::to_string(max_algebra_dim));
}

void check_degree(Index n, Index k)
{
    if (k < 0 || k > n)
        throw DegreeOutOfRange("degree " + std::to_string(k) + " outside 0.." + std::to_string(n));
}

/// m[(row_t, ·), (col_t, ·)] += scale · block, on vdim × vdim blocks.
void add_block(Matrix& m, Index vdim, Index row_t, Index col_t, const Matrix& block, const Rational& scale)
{
    for (Index a = 0; a < vdim; ++a)
        for (Index b = 0; b < vdim; ++b)
            if (!block(a, b).is_zero())
                m(row_t * vdim + a, col_t * vdim + b) += scale * block(a, b);
}

void add_identity(Matrix& m, Index vdim, Index row_t, Index col_t, const Rational& scale)
{
    for (Index a = 0; a < vdim; ++a)
        m(row_t * vdim + a, col_t * vdim + a) += scale;
}

} // namespace

int sort_with_sign(std::vector<Index>& seq)
{
    int sign = 1;
    for (std::size_t i = 1; i < seq.size(); ++i)
        for (std::size_t j = i; j > 0 && seq[j - 1] >= seq[j]; --j) {
            if (seq[j - 1] == seq[j])
                return 0;
            std::swap(seq[j - 1], seq[j]);
            sign = -sign;
        }
    return sign;
}

Index binomial(Index n, Index k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Index r = 1;
    for (Index i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

Index lex_rank(Index n, std::span<const Index> sorted)
{
    const Index k = static_cast<Index>(sorted.size());
    Index r = 0;
    Index next = 0;
    for (Index i = 0; i < k; ++i) {
        for (Index j = next; j < sorted[static_cast<std::size_t>(i)]; ++j)
            r += binomial(n - 1 - j, k - 1 - i);
        next = sorted[static_cast<std::size_t>(i)] + 1;
    }
    return r;
}

TupleBasis::TupleBasis(Index n, Index k) : n_(n), k_(k), size_(binomial(n, k))
{
    check_dim(n);
    check_degree(n, k);
    flat_.reserve(static_cast<std::size_t>(size_ * k));
    std::vector<Index> c(static_cast<std::size_t>(k));
    for (Index i = 0; i < k; ++i)
        c[static_cast<std::size_t>(i)] = i;
    for (Index t = 0; t < size_; ++t) {
        flat_.insert(flat_.end(), c.begin(), c.end());
        // Advance to the next combination in lexicographic order.
        Index i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++c[static_cast<std::size_t>(i)];
        for (Index j = i + 1; j < k; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
}

CochainLevel::CochainLevel(GModule module, Index degree) : module_(std::move(module)), degree_(degree)
{
    check_degree(algebra().dim(), degree);
}

CochainLevel::CochainLevel(GModule module, Index degree, const Subalgebra& h)
    : module_(std::move(module)), degree_(degree)
{
    relative_basis_ = relative_subspace(module_, degree, h);
}

Matrix CochainLevel::basis() const
{
    if (relative_basis_)
        return *relative_basis_;
    return Matrix::Identity(space_dim(), space_dim());
}

Vector Cochain::evaluate(std::vector<Index> args) const
{
    if (static_cast<Index>(args.size()) != degree)
        throw DimensionMismatch("cochain of degree " + std::to_string(degree) + " evaluated on "
                                + std::to_string(args.size()) + " arguments");
    const int sign = sort_with_sign(args);
    if (sign == 0)
        return Vector::Zero(vdim);
    const Index t = lex_rank(algebra_dim, args);
    Vector v = coords.segment(t * vdim, vdim);
    return sign > 0 ? v : Vector(-v);
}

Cochain basic_form(Index algebra_dim, std::vector<Index> indices)
{
    const Index k = static_cast<Index>(indices.size());
    Cochain c{algebra_dim, 1, k, Vector::Zero(binomial(algebra_dim, k))};
    const int sign = sort_with_sign(indices);
    if (sign != 0)
        c.coords(lex_rank(algebra_dim, indices)) = Rational(sign);
    return c;
}

Matrix differential_matrix(const GModule& v, Index k)
{
    const LieAlgebra& g = v.algebra();
    const Index n = g.dim();
    const Index vdim = v.vdim();
    check_degree(n, k);
    const TupleBasis src(n, k);
    const Index target_size = binomial(n, k + 1);
    Matrix d = Matrix::Zero(target_size * vdim, src.size() * vdim);
    if (target_size == 0)
        return d;
    const TupleBasis dst(n, k + 1);

    std::vector<Index> seq;
    for (Index s = 0; s < dst.size(); ++s) {
        const auto row = dst.tuple(s);
        // Σ_p (−1)^p X_p · f(…, X̂_p, …)
        for (Index p = 0; p <= k; ++p) {
            seq.clear();
            for (Index q = 0; q <= k; ++q)
                if (q != p)
                    seq.push_back(row[static_cast<std::size_t>(q)]);
            const Rational sign(p % 2 == 0 ? 1 : -1);
            add_block(d, vdim, s, src.index_of(seq), v.action_basis(row[static_cast<std::size_t>(p)]), sign);
        }
        // Σ_{p<q} (−1)^{p+q} f([X_p, X_q], …, X̂_p, …, X̂_q, …)
        for (Index p = 0; p <= k; ++p)
            for (Index q = p + 1; q <= k; ++q) {
                const Vector br = g.bracket_basis(row[static_cast<std::size_t>(p)], row[static_cast<std::size_t>(q)]);
                for (Index m = 0; m < n; ++m) {
                    if (br(m).is_zero())
                        continue;
                    seq.assign(1, m);
                    for (Index r = 0; r <= k; ++r)
                        if (r != p && r != q)
                            seq.push_back(row[static_cast<std::size_t>(r)]);
                    const int sigma = sort_with_sign(seq);
                    if (sigma == 0)
                        continue;
                    const Rational scale = Rational((p + q) % 2 == 0 ? sigma : -sigma) * br(m);
                    add_identity(d, vdim, s, src.index_of(seq), scale);
                }
            }
    }
    return d;
}

Matrix interior_product_matrix(const GModule& v, Index k, const Vector& x)
{
    const Index n = v.algebra().dim();
    const Index vdim = v.vdim();
    check_degree(n, k);
    if (x.size() != n)
        throw DimensionMismatch("interior product by an element of the wrong length");
    const TupleBasis src(n, k);
    if (k == 0)
        return Matrix::Zero(0, src.size() * vdim);
    const TupleBasis dst(n, k - 1);
    Matrix out = Matrix::Zero(dst.size() * vdim, src.size() * vdim);
    std::vector<Index> seq;
    for (Index s = 0; s < dst.size(); ++s) {
        const auto row = dst.tuple(s);
        for (Index m = 0; m < n; ++m) {
            if (x(m).is_zero())
                continue;
            seq.assign(1, m);
            seq.insert(seq.end(), row.begin(), row.end());
            const int sigma = sort_with_sign(seq);
            if (sigma == 0)
                continue;
            add_identity(out, vdim, s, src.index_of(seq), Rational(sigma) * x(m));
        }
    }
    return out;
}

Matrix lie_derivative_matrix(const GModule& v, Index k, const Vector& x)
{
    const LieAlgebra& g = v.algebra();
    const Index n = g.dim();
    const Index vdim = v.vdim();
    check_degree(n, k);
    const TupleBasis basis(n, k);
    Matrix out = Matrix::Zero(basis.size() * vdim, basis.size() * vdim);
    const Matrix rho = v.action(x);
    const Matrix adx = g.ad(x);
    std::vector<Index> seq;
    for (Index s = 0; s < basis.size(); ++s) {
        const auto row = basis.tuple(s);
        add_block(out, vdim, s, s, rho, Rational(1));
        // Σ_p f(…, [X_p, X], …); [e_j, X] = −ad(X) e_j.
        for (Index p = 0; p < k; ++p) {
            const Index j = row[static_cast<std::size_t>(p)];
            for (Index m = 0; m < n; ++m) {
                const Rational coeff = -adx(m, j);
                if (coeff.is_zero())
                    continue;
                seq.assign(row.begin(), row.end());
                seq[static_cast<std::size_t>(p)] = m;
                const int sigma = sort_with_sign(seq);
                if (sigma == 0)
                    continue;
                add_identity(out, vdim, s, basis.index_of(seq), Rational(sigma) * coeff);
            }
        }
    }
    return out;
}

Matrix wedge_dual_matrix(const GModule& v, Index k, Index i)
{
    const Index n = v.algebra().dim();
    const Index vdim = v.vdim();
    check_degree(n, k);
    const TupleBasis src(n, k);
    const Index target_size = binomial(n, k + 1);
    Matrix out = Matrix::Zero(target_size * vdim, src.size() * vdim);
    if (target_size == 0)
        return out;
    const TupleBasis dst(n, k + 1);
    // (α ∧ f)(X_0..X_k) = Σ_p (−1)^p α(X_p) f(…, X̂_p, …), α = e*_i.
    std::vector<Index> seq;
    for (Index s = 0; s < dst.size(); ++s) {
        const auto row = dst.tuple(s);
        for (Index p = 0; p <= k; ++p) {
            if (row[static_cast<std::size_t>(p)] != i)
                continue;
            seq.clear();
            for (Index q = 0; q <= k; ++q)
                if (q != p)
                    seq.push_back(row[static_cast<std::size_t>(q)]);
            add_identity(out, vdim, s, src.index_of(seq), Rational(p % 2 == 0 ? 1 : -1));
        }
    }
    return out;
}

Matrix j_map_matrix(const LieAlgebra& g, Index k)
{
    const Index n = g.dim();
    if (k < 1 || k > n)
        throw DegreeOutOfRange("J is defined for degrees 1.." + std::to_string(n) + ", got " + std::to_string(k));
    const TupleBasis src(n, k);
    const TupleBasis dst(n, k - 1);
    Matrix out = Matrix::Zero(dst.size() * n, src.size());
    std::vector<Index> seq;
    for (Index s = 0; s < dst.size(); ++s) {
        const auto row = dst.tuple(s);
        for (Index a = 0; a < n; ++a) {
            seq.assign(1, a);
            seq.insert(seq.end(), row.begin(), row.end());
            const int sigma = sort_with_sign(seq);
            if (sigma == 0)
                continue;
            out(s * n + a, src.index_of(seq)) += Rational(sigma);
        }
    }
    return out;
}

Matrix relative_subspace(const GModule& v, Index k, const Subalgebra& h)
{
    check_degree(v.algebra().dim(), k);
    if (!(h.ambient() == v.algebra()))
        throw MixedAlgebras("subalgebra lives in a different algebra than the module");
    const Index size = binomial(v.algebra().dim(), k) * v.vdim();
    Matrix constraints(0, size);
    for (const auto& b : h.vectors()) {
        if (k > 0)
            constraints = vstack(constraints, interior_product_matrix(v, k, b));
        constraints = vstack(constraints, lie_derivative_matrix(v, k, b));
    }
    return kernel_matrix(constraints);
}

} // namespace liecohom
