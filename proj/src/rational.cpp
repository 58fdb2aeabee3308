#include "liecohom/rational.hpp"

#include "liecohom/errors.hpp"

#include <cctype>

namespace liecohom {

namespace {

bool valid_integer(std::string_view s, bool allow_sign)
{
    if (s.empty())
        return false;
    std::size_t pos = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+'))
        pos = 1;
    if (pos == s.size())
        return false;
    for (; pos < s.size(); ++pos)
        if (!std::isdigit(static_cast<unsigned char>(s[pos])))
            return false;
    return true;
}

std::string strip_plus(std::string_view s)
{
    if (!s.empty() && s[0] == '+')
        s.remove_prefix(1);
    return std::string(s);
}

} // namespace

Rational::Rational(long numerator, long denominator)
{
    if (denominator == 0)
        throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("division by zero rational");
    value_ /= o.value_;
    return *this;
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!valid_integer(num, true))
        throw ParseError("invalid rational '" + std::string(text) + "'");
    mpz_class n(strip_plus(num), 10);
    mpz_class d(1);
    if (slash != std::string_view::npos) {
        const std::string_view den = text.substr(slash + 1);
        if (!valid_integer(den, false))
            throw ParseError("invalid rational '" + std::string(text) + "'");
        d = mpz_class(std::string(den), 10);
        if (d == 0)
            throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(mpq_class(n, d));
}

std::string Rational::str() const
{
    if (value_.get_den() == 1)
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

} // namespace liecohom
