// Command-line front end for the liecohom library.
//
// Exit codes: 0 success, 1 validation error, 2 parse error, 3 verify-paper failures.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "liecohom/io.hpp"
#include "liecohom/report.hpp"
#include "liecohom/verify.hpp"
#include "liecohom/volume.hpp"

namespace {

using namespace liecohom;

constexpr int exit_ok = 0;
constexpr int exit_validation = 1;
constexpr int exit_parse = 2;
constexpr int exit_verify = 3;

struct LoadedAlgebra {
    AlgebraFile file;
    std::string digest;
    std::filesystem::path base_dir;
};

/// "builtin:<name>" or a path to an algebra file.
LoadedAlgebra load_algebra(const std::string& source)
{
    constexpr std::string_view prefix = "builtin:";
    if (source.rfind(prefix, 0) == 0) {
        const std::string name = source.substr(prefix.size());
        return {to_algebra_file(builtin(name)), digest_hex(source), std::filesystem::current_path()};
    }
    const std::string text = read_text_file(source);
    return {parse_algebra_json(text, source), digest_hex(text), std::filesystem::current_path()};
}

void emit(const Report& report, bool json)
{
    std::cout << (json ? report.to_machine() : report.to_human());
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string term_name(const LieAlgebra& g, std::span<const Index> tuple)
{
    if (tuple.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < tuple.size(); ++i)
        s += (i ? "^" : "") + g.basis_names()[static_cast<std::size_t>(tuple[i])] + "*";
    return s;
}

/// Human rendering of a cochain: Σ coefficient · (wedge of dual basis) ⊗ v_a (1-based a).
std::string render_cochain(const LieAlgebra& g, const Cochain& c)
{
    const TupleBasis tuples(g.dim(), c.degree);
    std::string out;
    for (Index t = 0; t < tuples.size(); ++t)
        for (Index a = 0; a < c.vdim; ++a) {
            const Rational& x = c.coords(t * c.vdim + a);
            if (x.is_zero())
                continue;
            if (!out.empty())
                out += " + ";
            out += "(" + x.str() + ")" + term_name(g, tuples.tuple(t));
            if (c.vdim > 1)
                out += "⊗v" + std::to_string(a + 1);
        }
    return out.empty() ? "0" : out;
}

std::string coords_string(const Vector& v)
{
    std::string s;
    for (Index i = 0; i < v.size(); ++i)
        s += (i ? " " : "") + v(i).str();
    return s;
}

int cmd_check(const std::string& source, bool json)
{
    const LoadedAlgebra loaded = load_algebra(source);
    const LieAlgebra& g = loaded.file.algebra;
    const StructureReport r = structure_report(g);
    Report report("check");
    report.add("input", source);
    report.add("digest", loaded.digest);
    report.add("algebra", loaded.file.name);
    report.add("dim", std::to_string(g.dim()));
    report.add("jacobi", "ok");
    report.add("killing_det", r.killing_determinant.str());
    report.add("killing_rank", std::to_string(r.killing_rank));
    report.add("semisimple", yes_no(r.is_semisimple));
    report.add("reductive", yes_no(r.is_reductive));
    report.add("center_dim", std::to_string(r.center.dim()));
    report.add("derived_dim", std::to_string(r.derived.dim()));
    if (loaded.file.h)
        report.add("h_subalgebra_dim", std::to_string(loaded.file.h->dim()));
    if (json) {
        emit(report, true);
    } else {
        std::cout << "algebra: " << loaded.file.name << " (dim " << g.dim() << ")\n"
                  << "jacobi: ok\n"
                  << "semisimple: " << yes_no(r.is_semisimple) << ", killing det: " << r.killing_determinant
                  << ", killing rank: " << r.killing_rank << "\n"
                  << "reductive: " << yes_no(r.is_reductive) << "\n"
                  << "center dim: " << r.center.dim() << ", derived dim: " << r.derived.dim() << "\n";
        if (loaded.file.h)
            std::cout << "h_subalgebra dim: " << loaded.file.h->dim() << "\n";
    }
    return exit_ok;
}

struct CohomologyArgs {
    std::string source;
    std::string coeffs = "trivial";
    bool relative = false;
    std::string degree = "all";
    bool representatives = false;
    bool json = false;
};

int cmd_cohomology(const CohomologyArgs& args)
{
    const LoadedAlgebra loaded = load_algebra(args.source);
    const LieAlgebra& g = loaded.file.algebra;
    if (args.relative && !loaded.file.h)
        throw ValidationError("--relative needs an h_subalgebra section in the algebra file");
    const GModule v = parse_module_spec(g, args.coeffs, loaded.base_dir);
    const std::optional<Subalgebra> h = args.relative ? loaded.file.h : std::nullopt;
    const Index top = g.dim();

    Index lo = 0, hi = h ? top - h->dim() : top;
    if (args.degree != "all") {
        std::size_t used = 0;
        long k = -1;
        try {
            k = std::stol(args.degree, &used);
        } catch (const std::exception&) {
            throw ParseError("--degree expects an integer or 'all', got '" + args.degree + "'");
        }
        if (used != args.degree.size())
            throw ParseError("--degree expects an integer or 'all', got '" + args.degree + "'");
        if (k < 0 || k > top)
            throw DegreeOutOfRange("degree " + std::to_string(k) + " outside 0.." + std::to_string(top));
        lo = hi = k;
    }

    const Complex complex(v, h, lo, hi);
    Report report("cohomology");
    report.add("input", args.source);
    report.add("digest", loaded.digest);
    report.add("algebra", loaded.file.name);
    report.add("dim", std::to_string(top));
    report.add("coeffs", v.label());
    report.add("relative", yes_no(h.has_value()));
    if (h)
        report.add("note", "relative cohomology is computed at the Lie-algebra level; reading it as invariant-form "
                           "cohomology of G/H assumes H connected");
    std::string table;
    std::vector<CohomologyResult> results;
    for (Index k = lo; k <= hi; ++k) {
        results.push_back(complex.cohomology(k, args.representatives));
        report.add("betti." + std::to_string(k), std::to_string(results.back().betti));
        table += (k > lo ? "," : "") + std::to_string(results.back().betti);
    }
    report.add("betti", "(" + table + ")");
    if (args.representatives)
        for (const auto& r : results)
            for (std::size_t j = 0; j < r.representatives.size(); ++j)
                report.add("rep." + std::to_string(r.degree) + "." + std::to_string(j + 1),
                           args.json ? coords_string(r.representatives[j].coords)
                                     : render_cochain(g, r.representatives[j]));
    emit(report, args.json);
    return exit_ok;
}

struct VolumeArgs {
    std::string kind;
    std::string chi;
    std::string e;
    long n = 0;
    bool json = false;
};

int cmd_volume(const VolumeArgs& args)
{
    Rational coefficient;
    Report report("volume");
    report.add("kind", args.kind);
    if (args.kind == "seifert") {
        if (args.chi.empty() || args.e.empty())
            throw ParseError("volume seifert needs --chi and --e");
        const Rational chi = Rational::parse(args.chi);
        const Rational e = Rational::parse(args.e);
        report.add("chi", chi.str());
        report.add("e", e.str());
        coefficient = seifert_volume(chi, e);
    } else if (args.kind == "sl2tilde") {
        if (args.e.empty())
            throw ParseError("volume sl2tilde needs --n and --e");
        const Rational e = Rational::parse(args.e);
        report.add("n", std::to_string(args.n));
        report.add("e", e.str());
        coefficient = sl2tilde_volume(args.n, e);
    } else {
        throw ParseError("volume kind must be 'seifert' or 'sl2tilde'");
    }
    report.add("pi2_coefficient", coefficient.str());
    report.add("volume", format_pi_squared(coefficient));
    if (args.json)
        emit(report, true);
    else
        std::cout << format_pi_squared(coefficient) << "\n";
    return exit_ok;
}

struct VerifyArgs {
    bool json = false;
    std::size_t samples = 200;
    bool flip_coadjoint = false;
    bool omit_diagonal = false;
};

int cmd_verify(const VerifyArgs& args)
{
    VerifyOptions options;
    options.random_samples = args.samples;
    options.coadjoint_sign = args.flip_coadjoint ? CoadjointSign::Transpose : CoadjointSign::NegativeTranspose;
    options.omit_diagonal = args.omit_diagonal;
    const auto rows = verify_paper(options);
    const Report report = verify_report(rows);
    if (args.json) {
        emit(report, true);
    } else {
        for (const auto& row : rows)
            std::cout << (row.pass ? "PASS  " : "FAIL  ") << row.id << "  [" << row.anchor << "]  " << row.detail
                      << "\n";
        std::cout << report.get("summary.passed").value() << "/" << rows.size() << " rows pass\n";
    }
    return all_pass(rows) ? exit_ok : exit_verify;
}

int cmd_export(const std::string& name)
{
    std::cout << write_algebra_json(to_algebra_file(builtin(name)));
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Chevalley-Eilenberg cohomology of Lie algebras"};
    app.require_subcommand(1);

    bool check_json = false;
    std::string check_source;
    auto* check = app.add_subcommand("check", "Validate an algebra and report its structure");
    check->add_option("algebra", check_source, "algebra file or builtin:<name>")->required();
    check->add_flag("--json", check_json, "machine-readable report");

    CohomologyArgs coh;
    auto* cohomology = app.add_subcommand("cohomology", "Betti numbers and representatives of H^k(g[,h];V)");
    cohomology->add_option("algebra", coh.source, "algebra file or builtin:<name>")->required();
    cohomology->add_option("--coeffs", coh.coeffs, "module spec (trivial, trivial:n, adjoint, coadjoint, dual:S, "
                                                   "sum:S+T, file:path)");
    cohomology->add_flag("--relative", coh.relative, "relative to the file's h_subalgebra");
    cohomology->add_option("--degree", coh.degree, "degree k or 'all'");
    cohomology->add_flag("--representatives", coh.representatives, "print canonical cocycle representatives");
    cohomology->add_flag("--json", coh.json, "machine-readable report");

    VolumeArgs vol;
    auto* volume = app.add_subcommand("volume", "Closed-form volume constants as multiples of pi^2");
    volume->add_option("kind", vol.kind, "seifert or sl2tilde")->required();
    volume->add_option("--chi", vol.chi, "orbifold Euler characteristic (rational)");
    volume->add_option("--e", vol.e, "Euler number (rational)");
    volume->add_option("--n", vol.n, "central element index (integer)");
    volume->add_flag("--json", vol.json, "machine-readable report");

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify-paper", "Run the reproducibility table over the built-in catalog");
    verify->add_flag("--json", ver.json, "machine-readable report");
    verify->add_option("--samples", ver.samples, "number of randomized identity samples");
    verify->add_flag("--mutate-coadjoint-sign", ver.flip_coadjoint, "use +ad^T on g* (mutation test)")
        ->group("");
    verify->add_flag("--mutate-omit-diagonal", ver.omit_diagonal, "drop the central part of h_R (mutation test)")
        ->group("");

    std::string export_name;
    auto* exporter = app.add_subcommand("export", "Write a built-in catalog entry as an algebra file");
    exporter->add_option("name", export_name, "catalog name")->required();

    app.add_subcommand("catalog", "List built-in catalog names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_parse;
    }

    try {
        if (*check)
            return cmd_check(check_source, check_json);
        if (*cohomology)
            return cmd_cohomology(coh);
        if (*volume)
            return cmd_volume(vol);
        if (*verify)
            return cmd_verify(ver);
        if (*exporter)
            return cmd_export(export_name);
        for (const auto& name : builtin_names())
            std::cout << name << "\n";
        return exit_ok;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_validation;
    }
}
