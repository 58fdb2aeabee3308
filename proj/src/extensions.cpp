#include "liecohom/extensions.hpp"

#include <charconv>

namespace liecohom {

namespace {

Vector vec(std::initializer_list<long> values)
{
    Vector v(static_cast<Index>(values.size()));
    Index i = 0;
    for (const long x : values)
        v(i++) = Rational(x);
    return v;
}

Vector unit(Index n, Index i, long value = 1)
{
    Vector v = Vector::Zero(n);
    v(i) = Rational(value);
    return v;
}

Vector pad(const Vector& v, Index n)
{
    Vector out = Vector::Zero(n);
    out.head(v.size()) = v;
    return out;
}

LieAlgebra make_sl2()
{
    BracketTable t;
    t[{0, 1}] = vec({0, 2, 0});  // [H,E] = 2E
    t[{0, 2}] = vec({0, 0, -2}); // [H,F] = -2F
    t[{1, 2}] = vec({1, 0, 0});  // [E,F] = H
    return LieAlgebra::validate({"H", "E", "F"}, t);
}

LieAlgebra make_so3()
{
    BracketTable t;
    t[{0, 1}] = vec({0, 0, 1});  // [X,Y] = Z
    t[{1, 2}] = vec({1, 0, 0});  // [Y,Z] = X
    t[{0, 2}] = vec({0, -1, 0}); // [X,Z] = -Y
    return LieAlgebra::validate({"X", "Y", "Z"}, t);
}

LieAlgebra make_sl2sl2()
{
    BracketTable t;
    for (Index block = 0; block < 2; ++block) {
        const Index o = 3 * block;
        t[{o, o + 1}] = Rational(2) * unit(6, o + 1);
        t[{o, o + 2}] = Rational(-2) * unit(6, o + 2);
        t[{o + 1, o + 2}] = unit(6, o);
    }
    return LieAlgebra::validate({"H1", "E1", "F1", "H2", "E2", "F2"}, t);
}

LieAlgebra make_heis3()
{
    BracketTable t;
    t[{0, 1}] = vec({0, 0, 1}); // [X,Y] = Z
    return LieAlgebra::validate({"X", "Y", "Z"}, t);
}

LieAlgebra make_abelian(Index n)
{
    std::vector<std::string> names;
    for (Index i = 0; i < n; ++i)
        names.push_back("A" + std::to_string(i + 1));
    return LieAlgebra::validate(std::move(names), {});
}

Index parse_count(std::string_view text, std::string_view name)
{
    Index n = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (ec != std::errc() || ptr != text.data() + text.size() || n < 1 || n > max_algebra_dim)
        throw ValidationError("bad parameter '" + std::string(text) + "' for " + std::string(name));
    return n;
}

std::vector<Index> binomial_row(Index n)
{
    std::vector<Index> row;
    for (Index k = 0; k <= n; ++k)
        row.push_back(binomial(n, k));
    return row;
}

} // namespace

ExtensionPair central_extension(const LieAlgebra& g, const Subalgebra& h, const std::vector<Vector>& r_basis,
                                Index rank, const Matrix& mixing)
{
    const Index n = g.dim();
    const Index nr = static_cast<Index>(r_basis.size());
    if (!(h.ambient() == g))
        throw MixedAlgebras("h is not a subalgebra of the given algebra");
    if (rank < 0 || mixing.rows() != rank || mixing.cols() != nr)
        throw DimensionMismatch("mixing matrix must be rank x |r_basis| = " + std::to_string(rank) + "x"
                                + std::to_string(nr));
    for (const auto& r : r_basis)
        if (r.size() != n)
            throw DimensionMismatch("r_basis vector has wrong length");
    for (Index i = 0; i < nr; ++i)
        for (Index j = i + 1; j < nr; ++j)
            if (!is_zero(g.bracket(r_basis[static_cast<std::size_t>(i)], r_basis[static_cast<std::size_t>(j)])))
                throw RNotAbelian("r_basis vectors " + std::to_string(i) + " and " + std::to_string(j)
                                  + " do not commute");
    for (std::size_t b = 0; b < h.vectors().size(); ++b)
        for (Index i = 0; i < nr; ++i)
            if (!is_zero(g.bracket(h.vectors()[b], r_basis[static_cast<std::size_t>(i)])))
                throw RNotCommutingWithH("h basis vector " + std::to_string(b) + " does not commute with r_basis "
                                         + std::to_string(i));
    if (liecohom::rank(mixing) != rank)
        throw MixingRankDeficient("mixing matrix does not have full row rank");

    std::vector<std::string> names = g.basis_names();
    for (Index a = 0; a < rank; ++a)
        names.push_back(rank == 1 ? "c" : "c" + std::to_string(a + 1));
    BracketTable table;
    for (const auto& [pair, value] : g.brackets())
        table.emplace(pair, pad(value, n + rank));
    LieAlgebra g_R = LieAlgebra::validate(std::move(names), table);

    std::vector<Vector> iso;
    for (const auto& v : h.vectors())
        iso.push_back(pad(v, n + rank));
    for (Index i = 0; i < nr; ++i) {
        Vector v = pad(r_basis[static_cast<std::size_t>(i)], n + rank);
        for (Index a = 0; a < rank; ++a)
            v(n + a) = mixing(a, i);
        iso.push_back(std::move(v));
    }
    Subalgebra h_R = Subalgebra::make(g_R, std::move(iso));
    const Index dim_X = g_R.dim() - h_R.dim();
    return ExtensionPair{g, std::move(g_R), std::move(h_R), r_basis, rank, dim_X};
}

ExtensionPair without_diagonal(const ExtensionPair& pair)
{
    const Index n = pair.base.dim();
    const Index nr = static_cast<Index>(pair.r_basis.size());
    // The first dim h_R − |r| vectors come from h; keep them and drop the central parts of the rest.
    std::vector<Vector> iso(pair.h_R.vectors().begin(), pair.h_R.vectors().end() - nr);
    for (const auto& r : pair.r_basis)
        iso.push_back(pad(r, n + pair.rank));
    ExtensionPair out = pair;
    out.h_R = Subalgebra::make(pair.g_R, std::move(iso));
    out.dim_X = out.g_R.dim() - out.h_R.dim();
    return out;
}

ExtensionPair center_only(const ExtensionPair& pair)
{
    const Index n = pair.base.dim();
    std::vector<Vector> iso;
    for (Index a = 0; a < pair.rank; ++a)
        iso.push_back(unit(n + pair.rank, n + a));
    ExtensionPair out = pair;
    out.h_R = Subalgebra::make(pair.g_R, std::move(iso));
    out.dim_X = out.g_R.dim() - out.h_R.dim();
    return out;
}

GModule sl2_irrep(const LieAlgebra& sl2, Index weight)
{
    const Index d = weight + 1;
    Matrix h = Matrix::Zero(d, d), e = Matrix::Zero(d, d), f = Matrix::Zero(d, d);
    for (Index k = 0; k < d; ++k) {
        h(k, k) = Rational(weight - 2 * k);
        if (k > 0)
            e(k - 1, k) = Rational(k * (weight - k + 1));
        if (k + 1 < d)
            f(k + 1, k) = Rational(1);
    }
    return GModule::make(sl2, {h, e, f}, "sl2-irrep:" + std::to_string(weight));
}

ExtensionPair sl2_real_extension()
{
    const LieAlgebra sl2 = make_sl2();
    Matrix mixing(1, 1);
    mixing(0, 0) = Rational(1);
    return central_extension(sl2, Subalgebra::zero(sl2), {vec({0, 1, -1})}, 1, mixing);
}

ExtensionPair fivedim_extension(const Rational& alpha)
{
    if (alpha.is_zero())
        throw ValidationError("fivedim_ext needs a nonzero rational slope");
    const LieAlgebra g = make_sl2sl2();
    Matrix mixing(1, 2);
    mixing(0, 0) = Rational(1);
    mixing(0, 1) = alpha;
    const std::vector<Vector> r = {vec({0, 1, -1, 0, 0, 0}), vec({0, 0, 0, 0, 1, -1})};
    return central_extension(g, Subalgebra::zero(g), r, 1, mixing);
}

std::vector<std::string> builtin_names()
{
    return {"sl2", "so3", "sl2sl2", "heis3", "abelian:2", "sl2_so2_pair", "sl2R_ext", "fivedim_ext:2"};
}

CatalogEntry builtin(std::string_view name)
{
    const auto colon = name.find(':');
    const std::string_view head = name.substr(0, colon);
    const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : name.substr(colon + 1);
    const bool has_arg = colon != std::string_view::npos;
    const auto no_arg = [&] {
        if (has_arg)
            throw UnknownName("catalog entry '" + std::string(head) + "' takes no parameter");
    };

    if (head == "sl2") {
        no_arg();
        LieAlgebra g = make_sl2();
        CatalogEntry e{std::string(name), g, std::nullopt, std::nullopt, true};
        e.irreducible_modules = {sl2_irrep(g, 1), adjoint_module(g), sl2_irrep(g, 3)};
        e.expected_betti = {{"trivial", {1, 0, 0, 1}}, {"adjoint", {0, 0, 0, 0}}};
        return e;
    }
    if (head == "so3") {
        no_arg();
        LieAlgebra g = make_so3();
        CatalogEntry e{std::string(name), g, std::nullopt, std::nullopt, true};
        e.irreducible_modules = {adjoint_module(g)};
        e.expected_betti = {{"trivial", {1, 0, 0, 1}}, {"adjoint", {0, 0, 0, 0}}};
        return e;
    }
    if (head == "sl2sl2") {
        no_arg();
        CatalogEntry e{std::string(name), make_sl2sl2(), std::nullopt, std::nullopt, true};
        e.expected_betti = {{"trivial", {1, 0, 0, 2, 0, 0, 1}}};
        return e;
    }
    if (head == "heis3") {
        no_arg();
        CatalogEntry e{std::string(name), make_heis3(), std::nullopt, std::nullopt, false};
        e.expected_betti = {{"trivial", {1, 2, 2, 1}}};
        return e;
    }
    if (head == "abelian") {
        const Index n = parse_count(arg, "abelian");
        CatalogEntry e{std::string(name), make_abelian(n), std::nullopt, std::nullopt, false};
        e.expected_betti = {{"trivial", binomial_row(n)}};
        return e;
    }
    if (head == "sl2_so2_pair") {
        no_arg();
        LieAlgebra g = make_sl2();
        Subalgebra h = Subalgebra::make(g, {vec({0, 1, -1})});
        CatalogEntry e{std::string(name), g, h, std::nullopt, true};
        e.compact_h = true;
        e.expected_betti = {{"relative:trivial", {1, 0, 1}}};
        return e;
    }
    if (head == "sl2R_ext") {
        no_arg();
        ExtensionPair p = sl2_real_extension();
        CatalogEntry e{std::string(name), p.g_R, p.h_R, p, false};
        e.compact_h = true;
        return e;
    }
    if (head == "fivedim_ext") {
        if (!has_arg)
            throw UnknownName("fivedim_ext needs a slope, e.g. fivedim_ext:2");
        Rational alpha;
        try {
            alpha = Rational::parse(arg);
        } catch (const ParseError&) {
            throw ValidationError("fivedim_ext slope must be a rational p/q; irrational slopes are not supported "
                                  "since compact models are only known for rational slopes");
        }
        ExtensionPair p = fivedim_extension(alpha);
        CatalogEntry e{std::string(name), p.g_R, p.h_R, p, false};
        e.compact_h = true;
        return e;
    }
    throw UnknownName("unknown catalog entry '" + std::string(name) + "'");
}

VanishingReport verify_vanishing(const ExtensionPair& pair, CoadjointSign sign)
{
    VanishingReport r;
    r.dim_X = pair.dim_X;
    const GModule adjoint = adjoint_module(pair.g_R);
    r.h1_adjoint = Complex(adjoint, pair.h_R, 1, 1).betti(1);
    const Index k = pair.dim_X - 1;
    r.top_minus_one_coadjoint = Complex(coadjoint_module(pair.g_R, sign), pair.h_R, k, k).betti(k);
    r.duality = duality_report(pair.h_R, adjoint, 1);
    r.volume_form_dim = invariant_volume_form(pair.h_R).dim_top_relative;
    r.pass = r.h1_adjoint == 0 && r.top_minus_one_coadjoint == 0 && r.volume_form_dim == 1;
    return r;
}

} // namespace liecohom
