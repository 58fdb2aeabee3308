#include "liecohom/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "liecohom/identities.hpp"
#include "liecohom/samples.hpp"
#include "liecohom/volume.hpp"

namespace liecohom {

namespace {

std::string tuple_string(const std::vector<Index>& v)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

Vector probe_vector(Index n)
{
    Vector x(n);
    for (Index i = 0; i < n; ++i)
        x(i) = Rational((i * 7 + 3) % 5 - 2);
    return x;
}

VerifyRow betti_row(const std::string& id, const std::string& anchor, const GModule& v,
                    const std::optional<Subalgebra>& h, const std::vector<Index>& expected)
{
    const auto betti = betti_numbers(v, h);
    return {id, anchor, betti == expected, "betti=" + tuple_string(betti) + " expected=" + tuple_string(expected)};
}

/// A row whose computation throws is reported as failed, not propagated.
VerifyRow guarded(const std::string& id, const std::string& anchor, const std::function<VerifyRow()>& run)
{
    try {
        return run();
    } catch (const Error& e) {
        return {id, anchor, false, std::string("error: ") + e.what()};
    }
}

VerifyRow vanishing_row(const std::string& id, const ExtensionPair& pair, const VerifyOptions& options)
{
    const std::string anchor = "H^1(g_R,h_R;g_R)=0 and H^{dim X-1}(g_R,h_R;g_R*)=0";
    return guarded(id, anchor, [&]() -> VerifyRow {
        const ExtensionPair used = options.omit_diagonal ? without_diagonal(pair) : pair;
        const VanishingReport r = verify_vanishing(used, options.coadjoint_sign);
        std::ostringstream os;
        os << "dim_g_R=" << used.g_R.dim() << " dim_h_R=" << used.h_R.dim() << " dim_X=" << r.dim_X
           << " H1(adjoint)=" << r.h1_adjoint << " H" << r.dim_X - 1 << "(coadjoint)=" << r.top_minus_one_coadjoint
           << " duality(k=1)=" << r.duality.left << "/" << r.duality.right
           << " volume_form_dim=" << r.volume_form_dim;
        return {id, anchor, r.pass, os.str()};
    });
}

/// Accumulates one identity over many cases.
struct IdentityTally {
    std::string id;
    std::string anchor;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    IdentityTally(std::string row_id, std::string row_anchor) : id(std::move(row_id)), anchor(std::move(row_anchor)) {}

    void record(const std::function<bool()>& check, const std::string& where)
    {
        bool ok = false;
        std::string note;
        try {
            ok = check();
        } catch (const Error& e) {
            note = std::string(" (") + e.what() + ")";
        }
        ++cases;
        if (!ok && failures++ == 0)
            first_failure = where + note;
    }

    void record(bool ok, const std::string& where)
    {
        ++cases;
        if (!ok && failures++ == 0)
            first_failure = where;
    }

    VerifyRow row() const
    {
        std::string detail = std::to_string(cases) + " cases, " + std::to_string(failures) + " failures";
        if (failures)
            detail += "; first: " + first_failure;
        return {id, anchor, failures == 0 && cases > 0, detail};
    }
};

VerifyRow killing_row()
{
    const LieAlgebra g = builtin("sl2").algebra;
    const Matrix b = killing_form(g);
    Matrix expected = Matrix::Zero(3, 3);
    expected(0, 0) = Rational(8);
    expected(1, 2) = Rational(4);
    expected(2, 1) = Rational(4);
    const Rational det = determinant(b);
    return {"killing-form-sl2", "B(X,Y) = tr(ad X ad Y)", b == expected && det == Rational(-128),
            "det=" + det.str() + " rank=" + std::to_string(rank(b))};
}

VerifyRow killing_class_row(const std::string& name, const std::vector<Index>& args, const Rational& expected)
{
    const LieAlgebra g = builtin(name).algebra;
    const KillingThreeForm k = killing_three_form(g);
    std::vector<Index> a = args;
    const Rational value = k.form.evaluate_scalar(a);
    const bool ok = value == expected && k.closed && k.class_nonzero;
    return {"h3-killing-class-" + name, "B([.,.],.) is a nonvanishing class of H^3(g)", ok,
            "kappa=" + value.str() + " closed=" + (k.closed ? "yes" : "no")
                + " class_nonzero=" + (k.class_nonzero ? "yes" : "no")};
}

VerifyRow structure_row()
{
    std::ostringstream os;
    bool ok = true;
    const auto check = [&](const std::string& name, const LieAlgebra& g, bool semisimple, bool reductive,
                           Index center_dim) {
        const StructureReport r = structure_report(g);
        const bool row_ok = r.is_semisimple == semisimple && r.is_reductive == reductive && r.center.dim() == center_dim;
        ok = ok && row_ok;
        os << name << ":" << (r.is_semisimple ? "ss" : "-") << "/" << (r.is_reductive ? "red" : "nonred") << "/z"
           << r.center.dim() << " ";
    };
    check("sl2", builtin("sl2").algebra, true, true, 0);
    check("abelian:2", builtin("abelian:2").algebra, false, true, 2);
    check("heis3", builtin("heis3").algebra, false, false, 1);
    const ExtensionPair ext = sl2_real_extension();
    check("sl2R_ext", ext.g_R, false, true, ext.rank);
    for (const char* alpha : {"1", "2", "3", "1/2"}) {
        const ExtensionPair p = fivedim_extension(Rational::parse(alpha));
        check(std::string("fivedim_ext:") + alpha, p.g_R, false, true, p.rank);
    }
    std::string detail = os.str();
    detail.pop_back();
    return {"structure-classification", "the Lie algebra of the structure group is reductive", ok, detail};
}

} // namespace

std::vector<VerifyRow> identity_rows(const VerifyOptions& options)
{
    IdentityTally delta2{"identity-delta-squared", "delta o delta = 0"};
    IdentityTally cartan{"identity-cartan", "L_X = delta i_X + i_X delta"};
    IdentityTally dprime{"identity-delta-prime", "2 d w = sum_i e_i* ^ L_{e_i} w"};
    IdentityTally done{"identity-delta-one", "d w = sum_{i<j} w([e_j,e_i]) e_i*^e_j* on 1-forms"};
    IdentityTally jdelta{"identity-j-delta", "delta J = -J d"};
    IdentityTally jint{"identity-j-interior", "i_X J = -J i_X"};
    IdentityTally jlie{"identity-j-lie", "L_X J = J L_X"};

    const auto algebra_checks = [&](const LieAlgebra& g, Index k, const Vector& x, const std::string& where) {
        dprime.record(delta_prime_holds(g, k), where);
        if (k >= 1) {
            jdelta.record([&] { return j_delta_holds(g, k, options.coadjoint_sign); }, where);
            jint.record([&] { return j_interior_holds(g, k, x, options.coadjoint_sign); }, where);
            jlie.record([&] { return j_lie_holds(g, k, x, options.coadjoint_sign); }, where);
        }
    };

    for (const std::string name : {"sl2", "so3", "sl2sl2", "heis3", "abelian:2", "sl2R_ext", "fivedim_ext:2"}) {
        const CatalogEntry entry = builtin(name);
        const LieAlgebra& g = entry.algebra;
        const Vector x = probe_vector(g.dim());
        std::vector<GModule> modules{trivial_module(g), adjoint_module(g), coadjoint_module(g)};
        modules.insert(modules.end(), entry.irreducible_modules.begin(), entry.irreducible_modules.end());
        done.record(delta_one_holds(g), name);
        for (Index k = 0; k <= g.dim(); ++k) {
            const std::string where = name + " degree " + std::to_string(k);
            algebra_checks(g, k, x, where);
            for (const auto& v : modules) {
                delta2.record(delta_squared_holds(v, k), where + " " + v.label());
                cartan.record(cartan_holds(v, k, x), where + " " + v.label());
            }
        }
    }

    for (const auto& s : identity_samples(options.random_samples, options.seed)) {
        const LieAlgebra& g = s.module.algebra();
        delta2.record(delta_squared_holds(s.module, s.degree), s.description);
        cartan.record(cartan_holds(s.module, s.degree, s.x), s.description);
        done.record(delta_one_holds(g), s.description);
        algebra_checks(g, s.degree, s.x, s.description);
    }

    return {delta2.row(), cartan.row(), dprime.row(), done.row(), jdelta.row(), jint.row(), jlie.row()};
}

std::vector<VerifyRow> verify_paper(const VerifyOptions& options)
{
    std::vector<VerifyRow> rows;
    const CatalogEntry sl2 = builtin("sl2");
    const CatalogEntry so3 = builtin("so3");
    const std::string h_anchor = "H^0(g)=R, H^1(g)=H^2(g)=0, H^3(g)!=0";

    rows.push_back(betti_row("betti-sl2", h_anchor, trivial_module(sl2.algebra), std::nullopt, {1, 0, 0, 1}));
    rows.push_back(betti_row("betti-so3", h_anchor, trivial_module(so3.algebra), std::nullopt, {1, 0, 0, 1}));
    rows.push_back(betti_row("betti-heis3", "non-semisimple control", trivial_module(builtin("heis3").algebra),
                             std::nullopt, {1, 2, 2, 1}));

    const std::string w_anchor = "H^*(g;V)=0 for irreducible nontrivial V";
    rows.push_back(betti_row("whitehead-sl2-adjoint", w_anchor, adjoint_module(sl2.algebra), std::nullopt, {0, 0, 0, 0}));
    rows.push_back(betti_row("whitehead-so3-adjoint", w_anchor, adjoint_module(so3.algebra), std::nullopt, {0, 0, 0, 0}));
    for (Index weight : {1, 3})
        rows.push_back(betti_row("whitehead-sl2-irrep" + std::to_string(weight), w_anchor,
                                 sl2_irrep(sl2.algebra, weight), std::nullopt, {0, 0, 0, 0}));

    rows.push_back(killing_row());
    rows.push_back(killing_class_row("sl2", {0, 1, 2}, Rational(8)));
    rows.push_back(killing_class_row("so3", {0, 1, 2}, Rational(-2)));

    {
        const CatalogEntry pair = builtin("sl2_so2_pair");
        VerifyRow row = betti_row("relative-sl2-so2", "invariant volume form unique up to signed rescaling",
                                  trivial_module(pair.algebra), pair.h, {1, 0, 1});
        const VolumeForm vf = invariant_volume_form(*pair.h);
        row.pass = row.pass && vf.dim_top_relative == 1;
        row.detail += " volume_form_dim=" + std::to_string(vf.dim_top_relative);
        rows.push_back(row);
    }

    rows.push_back(vanishing_row("vanishing-sl2R_ext", sl2_real_extension(), options));
    for (const char* alpha : {"1", "2", "3", "1/2"})
        rows.push_back(
            vanishing_row(std::string("vanishing-fivedim-alpha=") + alpha, fivedim_extension(Rational::parse(alpha)), options));

    {
        const ExtensionPair broken = without_diagonal(sl2_real_extension());
        const Index h1 = Complex(adjoint_module(broken.g_R), broken.h_R, 1, 1).betti(1);
        rows.push_back({"negative-control-no-diagonal", "vanishing needs the diagonal isotropy", h1 != 0,
                        "H1(adjoint) with h_R = span(E-F) is " + std::to_string(h1)});
    }

    for (auto& row : identity_rows(options))
        rows.push_back(std::move(row));

    {
        const Rational v = seifert_volume(Rational(-5, 2), Rational(3, 2));
        rows.push_back({"volume-seifert", "4 pi^2 chi^2/|e| = 50 pi^2/3 for chi=-5/2, e=3/2",
                        v == Rational(50, 3), format_pi_squared(v)});
        const Rational w = sl2tilde_volume(1, Rational(3, 2));
        rows.push_back({"volume-sl2tilde", "4 pi^2 n^2 |e| = 6 pi^2 for n=1, e=3/2", w == Rational(6),
                        format_pi_squared(w)});
    }

    rows.push_back(structure_row());
    return rows;
}

Report verify_report(const std::vector<VerifyRow>& rows)
{
    Report r("verify-paper");
    std::size_t passed = 0;
    for (const auto& row : rows) {
        r.add("row." + row.id + ".pass", row.pass ? "yes" : "no");
        r.add("row." + row.id + ".anchor", row.anchor);
        r.add("row." + row.id + ".detail", row.detail);
        passed += row.pass ? 1 : 0;
    }
    r.add("summary.passed", std::to_string(passed));
    r.add("summary.total", std::to_string(rows.size()));
    r.add("summary.status", passed == rows.size() ? "pass" : "fail");
    return r;
}

bool all_pass(const std::vector<VerifyRow>& rows)
{
    return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.pass; });
}

} // namespace liecohom
