#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace testing;

namespace {

// ad matrices of sl2 in the basis (H, E, F), multiplied out by hand from
// [H,E] = 2E, [H,F] = −2F, [E,F] = H. Column j is [X, e_j].
const Matrix ad_h = mat(3, 3, {0, 0, 0, 0, 2, 0, 0, 0, -2});
const Matrix ad_e = mat(3, 3, {0, 0, 1, -2, 0, 0, 0, 0, 0});
const Matrix ad_f = mat(3, 3, {0, -1, 0, 0, 0, 0, 2, 0, 0});

BracketTable sl2_table()
{
    return {{{0, 1}, vec({0, 2, 0})}, {{0, 2}, vec({0, 0, -2})}, {{1, 2}, vec({1, 0, 0})}};
}

Vector random_element(std::mt19937_64& rng, Index n)
{
    std::uniform_int_distribution<int> d(-4, 4);
    Vector v(n);
    for (Index i = 0; i < n; ++i)
        v(i) = Rational(d(rng), 1 + std::abs(d(rng)));
    return v;
}

std::vector<std::string> catalog_algebras()
{
    return {"sl2", "so3", "sl2sl2", "heis3", "abelian:1", "abelian:3", "sl2R_ext", "fivedim_ext:2", "fivedim_ext:1/2"};
}

} // namespace

TEST_CASE("validate accepts sl2 and abelian algebras")
{
    const LieAlgebra g = LieAlgebra::validate({"H", "E", "F"}, sl2_table());
    CHECK(g.dim() == 3);
    CHECK(g == sl2());
    CHECK(g.bracket_basis(2, 1) == vec({-1, 0, 0}));
    CHECK(g.bracket_basis(1, 1) == vec({0, 0, 0}));

    const LieAlgebra a = LieAlgebra::validate({"a", "b", "c", "d"}, {});
    CHECK(a.dim() == 4);
    for (Index i = 0; i < 4; ++i)
        CHECK(is_zero(a.ad_basis(i)));
}

TEST_CASE("validate rejects a Jacobi violation")
{
    // The Jacobi sum on (H,E,F) with [E,F] = H + E is nonzero:
    // [H,[E,F]] + [E,[F,H]] + [F,[H,E]] = [H,E] + [E,2F] + [F,2E] = 2E.
    BracketTable t = sl2_table();
    t[{1, 2}] = vec({1, 1, 0});
    try {
        LieAlgebra::validate({"H", "E", "F"}, t);
        FAIL("expected JacobiViolation");
    } catch (const JacobiViolation& e) {
        CHECK(e.i == 0);
        CHECK(e.j == 1);
        CHECK(e.k == 2);
    }
}

TEST_CASE("validate rejects malformed tables")
{
    CHECK_THROWS_AS(LieAlgebra::validate({"a", "b"}, {{{1, 0}, vec({1, 0})}}), DimensionMismatch);
    CHECK_THROWS_AS(LieAlgebra::validate({"a", "b"}, {{{0, 2}, vec({1, 0})}}), DimensionMismatch);
    CHECK_THROWS_AS(LieAlgebra::validate({"a", "b"}, {{{0, 1}, vec({1, 0, 0})}}), DimensionMismatch);
}

TEST_CASE("ad matrices")
{
    const LieAlgebra g = sl2();
    CHECK(g.ad_basis(0) == ad_h);
    CHECK(g.ad_basis(1) == ad_e);
    CHECK(g.ad_basis(2) == ad_f);
    CHECK(g.ad(vec({1, 0, 0})) == mat(3, 3, {0, 0, 0, 0, 2, 0, 0, 0, -2}));
    CHECK(is_zero(g.ad(vec({0, 0, 0}))));
    CHECK(g.ad(vec({2, -1, 3})) == Matrix(Rational(2) * ad_h - ad_e + Rational(3) * ad_f));

    // Heisenberg: ad(X) sends Y to Z and kills everything else.
    CHECK(heis3().ad_basis(0) == mat(3, 3, {0, 0, 0, 0, 0, 0, 0, 1, 0}));
}

TEST_CASE("Killing form")
{
    Matrix expected(3, 3);
    const std::vector<Matrix> ads{ad_h, ad_e, ad_f};
    for (Index i = 0; i < 3; ++i)
        for (Index j = 0; j < 3; ++j)
            expected(i, j) = Matrix(ads[static_cast<std::size_t>(i)] * ads[static_cast<std::size_t>(j)]).trace();
    CHECK(expected == mat(3, 3, {8, 0, 0, 0, 0, 4, 0, 4, 0}));
    CHECK(killing_form(sl2()) == expected);
    CHECK(determinant(expected) == Rational(-128));

    // so3: B = −2·identity.
    CHECK(killing_form(so3()) == Matrix(Rational(-2) * Matrix::Identity(3, 3)));
    CHECK(is_zero(killing_form(builtin("abelian:2").algebra)));
    CHECK(is_zero(killing_form(heis3())));
}

TEST_CASE("structure reports")
{
    const StructureReport s = structure_report(sl2());
    CHECK(s.is_semisimple);
    CHECK(s.is_reductive);
    CHECK(s.center.dim() == 0);
    CHECK(s.derived.dim() == 3);
    CHECK(s.killing_rank == 3);
    CHECK(s.killing_determinant == Rational(-128));

    const StructureReport a = structure_report(builtin("abelian:2").algebra);
    CHECK_FALSE(a.is_semisimple);
    CHECK(a.is_reductive);
    CHECK(a.center.dim() == 2);
    CHECK(a.derived.dim() == 0);

    const StructureReport h = structure_report(heis3());
    CHECK_FALSE(h.is_semisimple);
    CHECK_FALSE(h.is_reductive);
    REQUIRE(h.center.dim() == 1);
    REQUIRE(h.derived.dim() == 1);
    CHECK(h.center.vectors()[0] == vec({0, 0, 1}));
    CHECK(h.derived.vectors()[0] == vec({0, 0, 1}));

    const StructureReport t = structure_report(builtin("sl2sl2").algebra);
    CHECK(t.is_semisimple);
    CHECK(t.killing_rank == 6);
}

TEST_CASE("subalgebra validation")
{
    const LieAlgebra g = sl2();
    const Subalgebra so2 = Subalgebra::make(g, {vec({0, 1, -1})});
    CHECK(so2.dim() == 1);
    CHECK(Subalgebra::make(g, {vec({1, 0, 0}), vec({0, 1, 0})}).dim() == 2);
    CHECK(Subalgebra::zero(g).dim() == 0);
    CHECK_THROWS_AS(Subalgebra::make(g, {vec({0, 1, 0}), vec({0, 0, 1})}), NotSubalgebra);
    CHECK_THROWS_AS(Subalgebra::make(g, {vec({1, 0, 0}), vec({2, 0, 0})}), ValidationError);
    CHECK_THROWS_AS(Subalgebra::make(g, {vec({1, 0})}), DimensionMismatch);

    // The Borel subalgebra span{H, E} is itself a 2-dim non-abelian algebra.
    const LieAlgebra b = induced_algebra(Subalgebra::make(g, {vec({1, 0, 0}), vec({0, 1, 0})}));
    CHECK(b.bracket_basis(0, 1) == vec({0, 2}));
}

TEST_CASE("property: ad is a homomorphism and the Killing form is invariant")
{
    std::mt19937_64 rng(7);
    for (const auto& name : catalog_algebras()) {
        const LieAlgebra g = builtin(name).algebra;
        const Matrix b = killing_form(g);
        CAPTURE(name);
        CHECK(b == Matrix(b.transpose()));
        for (int trial = 0; trial < 10; ++trial) {
            const Vector x = random_element(rng, g.dim());
            const Vector y = random_element(rng, g.dim());
            const Vector z = random_element(rng, g.dim());
            CHECK(g.bracket(x, y) == Vector(-g.bracket(y, x)));
            const Matrix ax = g.ad(x), ay = g.ad(y);
            CHECK(g.ad(g.bracket(x, y)) == Matrix(ax * ay - ay * ax));
            const Rational lhs = (g.bracket(x, y).transpose() * b * z)(0, 0);
            const Rational rhs = (x.transpose() * b * g.bracket(y, z))(0, 0);
            CHECK(lhs == rhs);
            // B(x, y) = tr(ad x ad y) directly.
            CHECK((x.transpose() * b * y)(0, 0) == Matrix(ax * ay).trace());
        }
    }
}

TEST_CASE("property: center and derived algebra")
{
    for (const auto& name : catalog_algebras()) {
        const LieAlgebra g = builtin(name).algebra;
        const StructureReport r = structure_report(g);
        CAPTURE(name);
        for (const auto& z : r.center.vectors())
            for (Index i = 0; i < g.dim(); ++i)
                CHECK(is_zero(g.bracket(z, g.basis_vector(i))));
        // Every bracket of basis vectors lies in the derived algebra.
        Matrix derived = r.derived.basis_matrix();
        for (Index i = 0; i < g.dim(); ++i)
            for (Index j = i + 1; j < g.dim(); ++j)
                CHECK(rank(hstack(derived, Matrix(g.bracket_basis(i, j)))) == r.derived.dim());
        CHECK(r.is_semisimple == (determinant(killing_form(g)) != Rational(0)));
    }
}
