#include <doctest.h>

#include <random>

#include "liecohom/errors.hpp"
#include "liecohom/rational.hpp"

using liecohom::ParseError;
using liecohom::Rational;

TEST_CASE("rational parsing and canonical printing")
{
    CHECK(Rational::parse("6/4").str() == "3/2");
    CHECK(Rational::parse("-6/4").str() == "-3/2");
    CHECK(Rational::parse("-0").str() == "0");
    CHECK(Rational::parse("+7").str() == "7");
    CHECK(Rational::parse("10/5").str() == "2");
    CHECK(Rational::parse("10/5").is_integer());
    for (const char* bad : {"", "+", "-", "1/", "/2", "1/2/3", "1.5", " 1", "1 ", "a", "0x10", "1/0", "1//2", "6/-4", "6/+4"})
        CHECK_THROWS_AS(Rational::parse(bad), ParseError);
}

TEST_CASE("rational arithmetic")
{
    const Rational half(1, 2), third(1, 3);
    CHECK(half + third == Rational(5, 6));
    CHECK(half - third == Rational(1, 6));
    CHECK(half * third == Rational(1, 6));
    CHECK(half / third == Rational(3, 2));
    CHECK(-half == Rational(-1, 2));
    CHECK(Rational(-3, 4).abs() == Rational(3, 4));
    CHECK(third < half);
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(-2).sign() == -1);
    CHECK_THROWS_AS(half / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational text round-trip for |p|, q < 10^30")
{
    std::mt19937_64 rng(17);
    const auto digits = [&](int max_len, bool nonzero) {
        std::uniform_int_distribution<int> len(1, max_len), digit(0, 9), first(1, 9);
        std::string s(1, static_cast<char>('0' + first(rng)));
        const int n = len(rng);
        for (int i = 1; i < n; ++i)
            s += static_cast<char>('0' + digit(rng));
        if (!nonzero && digit(rng) == 0)
            return std::string("0");
        return s;
    };
    for (int trial = 0; trial < 500; ++trial) {
        const std::string p = (trial % 2 ? "-" : "") + digits(30, false);
        const std::string q = digits(30, true);
        const Rational x = Rational::parse(p + "/" + q);
        const std::string printed = x.str();
        CHECK(Rational::parse(printed) == x);
        CHECK(Rational::parse(printed).str() == printed);
        // Cross-check against GMP's own canonical form.
        mpq_class reference(p + "/" + q);
        reference.canonicalize();
        CHECK(printed == reference.get_str());
    }
}
