#include <doctest.h>

#include <array>
#include <cstdio>
#include <regex>
#include <string>
#include <sys/wait.h>

#include "liecohom/report.hpp"

namespace {

struct Run {
    int status = -1;
    std::string out;
};

/// Runs the CLI from the data directory with stderr folded into stdout.
Run cli(const std::string& args)
{
    const std::string command = std::string("cd '") + LIECOHOM_DATA_DIR + "' && '" + LIECOHOM_CLI + "' " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& text, const std::string& pattern)
{
    return std::regex_search(text, std::regex(pattern));
}

} // namespace

TEST_CASE("check")
{
    const Run sl2 = cli("check sl2.json");
    CHECK(sl2.status == 0);
    CHECK(contains(sl2.out, "semisimple: yes, killing det: -128"));

    const Run ab = cli("check abelian2.json");
    CHECK(ab.status == 0);
    CHECK(contains(ab.out, "semisimple: no"));
    CHECK(contains(ab.out, "reductive: yes"));

    const Run heis = cli("check heis3.json");
    CHECK(heis.status == 0);
    CHECK(contains(heis.out, "semisimple: no"));
    CHECK(contains(heis.out, "reductive: no"));

    CHECK(cli("check builtin:so3").status == 0);
}

TEST_CASE("cohomology")
{
    CHECK(contains(cli("cohomology sl2.json --coeffs trivial --degree all").out, R"(betti:\s+\(1,0,0,1\))"));
    CHECK(contains(cli("cohomology sl2.json --coeffs adjoint --degree all").out, R"(betti:\s+\(0,0,0,0\))"));
    CHECK(contains(cli("cohomology sl2_so2.json --coeffs trivial --relative --degree all").out, R"(betti:\s+\(1,0,1\))"));
    CHECK(contains(cli("cohomology sl2_so2.json --relative").out, "assumes H connected"));
    CHECK(contains(cli("cohomology heis3.json --degree 1 --representatives").out, R"(rep\.1\.1:\s+\(1\)X\*)"));
    CHECK(contains(cli("cohomology sl2.json --coeffs sl2_standard.json").out, R"(betti:\s+\(0,0,0,0\))"));
    CHECK(contains(cli("cohomology sl2R_ext.json --relative --coeffs adjoint --degree 1").out, R"(betti\.1:\s+0)"));
}

TEST_CASE("volume")
{
    CHECK(contains(cli("volume seifert --chi -5/2 --e 3/2").out, "50/3 · π²"));
    CHECK(contains(cli("volume sl2tilde --n 1 --e 3/2").out, "6 · π²"));
    CHECK(contains(cli("volume seifert --chi 0 --e 1").out, R"((^|\s)0\s*$)"));
}

TEST_CASE("exit codes")
{
    CHECK(cli("check sl2.json").status == 0);
    CHECK(cli("check sl2_bad_jacobi.json").status == 1);
    CHECK(contains(cli("check sl2_bad_jacobi.json").out, "Jacobi"));
    CHECK(cli("check malformed.json").status == 2);
    CHECK(cli("check no_such_file.json").status == 2);
    CHECK(cli("check builtin:nope").status == 1);
    CHECK(cli("cohomology sl2.json --coeffs bogus").status == 1);
    CHECK(cli("cohomology sl2.json --degree 9").status == 1);
    CHECK(cli("cohomology sl2.json --degree x").status == 2);
    CHECK(cli("cohomology sl2.json --relative").status == 1);
    CHECK(cli("volume seifert --chi 1 --e 0").status == 1);
    CHECK(cli("volume seifert --chi 1/0 --e 1").status == 2);
    CHECK(cli("volume bogus").status == 2);
    CHECK(cli("--no-such-flag").status == 2);
    CHECK(cli("verify-paper --samples 20").status == 0);
    CHECK(cli("verify-paper --samples 20 --mutate-coadjoint-sign").status == 3);
    CHECK(cli("verify-paper --samples 20 --mutate-omit-diagonal").status == 3);
}

TEST_CASE("machine output is deterministic and round-trips")
{
    for (const std::string args : {"check sl2.json --json", "cohomology heis3.json --representatives --json",
                                   "cohomology sl2_so2.json --relative --json", "volume seifert --chi -5/2 --e 3/2 --json",
                                   "verify-paper --samples 20 --json"}) {
        CAPTURE(args);
        const Run a = cli(args);
        const Run b = cli(args);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
        const liecohom::Report r = liecohom::Report::parse(a.out);
        CHECK(r.to_machine() == a.out);
    }
    const liecohom::Report v = liecohom::Report::parse(cli("verify-paper --samples 20 --json").out);
    CHECK(v.get("summary.status") == std::optional<std::string>("pass"));
    // The digest fingerprints the input file.
    const liecohom::Report c = liecohom::Report::parse(cli("check sl2.json --json").out);
    CHECK(c.get("digest").has_value());
    CHECK(c.get("digest") != liecohom::Report::parse(cli("check so3.json --json").out).get("digest"));
}

TEST_CASE("export and catalog")
{
    const Run e = cli("export sl2_so2_pair");
    CHECK(e.status == 0);
    CHECK(contains(e.out, R"("h_subalgebra")"));
    const Run c = cli("catalog");
    CHECK(c.status == 0);
    CHECK(contains(c.out, "fivedim_ext"));
}
