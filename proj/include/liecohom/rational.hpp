#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace liecohom {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Backed by GMP's mpq_class; every arithmetic result is canonical.
class Rational {
public:
    Rational() = default;
    Rational(int value) : value_(value) {}
    Rational(long value) : value_(value) {}
    Rational(long long value) : value_(static_cast<long>(value)) {}
    Rational(long numerator, long denominator);
    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    /// Parses "p/q" or "p" (optional leading sign, decimal digits only).
    /// Throws ParseError on malformed input or a zero denominator.
    static Rational parse(std::string_view text);

    std::string str() const;

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& gmp() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational abs() const { return Rational(mpq_class(::abs(value_))); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }
    friend Rational operator+(const Rational& a) { return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    /// Bit size of numerator plus denominator; used as the pivoting weight.
    std::size_t bit_weight() const
    {
        return mpz_sizeinbase(value_.get_num_mpz_t(), 2) + mpz_sizeinbase(value_.get_den_mpz_t(), 2);
    }

private:
    mpq_class value_;
};

inline Rational abs(const Rational& r) { return r.abs(); }
inline const Rational& conj(const Rational& r) { return r; }
inline const Rational& real(const Rational& r) { return r; }
inline Rational imag(const Rational&) { return Rational(0); }
inline Rational abs2(const Rational& r) { return r * r; }

} // namespace liecohom

namespace Eigen {

template <>
struct NumTraits<liecohom::Rational> : GenericNumTraits<liecohom::Rational> {
    using Real = liecohom::Rational;
    using NonInteger = liecohom::Rational;
    using Literal = liecohom::Rational;
    using Nested = liecohom::Rational;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 10,
        MulCost = 20
    };

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen
