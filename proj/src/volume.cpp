#include "liecohom/volume.hpp"

#include "liecohom/errors.hpp"

namespace liecohom {

Rational seifert_volume(const Rational& chi, const Rational& euler)
{
    if (euler.is_zero())
        throw ZeroEuler("Seifert volume needs a nonzero Euler number");
    return Rational(4) * chi * chi / euler.abs();
}

Rational sl2tilde_volume(long n, const Rational& euler)
{
    const Rational nn(n);
    return Rational(4) * nn * nn * euler.abs();
}

std::string format_pi_squared(const Rational& coefficient)
{
    if (coefficient.is_zero())
        return "0";
    return coefficient.str() + " · π²";
}

} // namespace liecohom
