#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <mpfr.h>

#include "abelkit/rational.hpp"

namespace abelkit {

// Working precision in bits. Every BigFloat carries its own; there is no
// process-wide default.
struct Precision {
    long bits = 128;

    static Precision from_digits(long decimal_digits);
    long digits() const; // decimal digits represented, rounded down

    friend auto operator<=>(const Precision &, const Precision &) = default;
};

// Arbitrary-precision binary float (MPFR), round-to-nearest throughout.
// Binary operations produce the larger of the operand precisions.
class BigFloat {
public:
    explicit BigFloat(Precision p = Precision{});
    BigFloat(long v, Precision p);
    BigFloat(const Rational &r, Precision p);
    BigFloat(double v, Precision p);
    BigFloat(const BigFloat &o);
    BigFloat(const BigFloat &o, Precision p); // rounded copy
    BigFloat(BigFloat &&o) noexcept;
    BigFloat &operator=(const BigFloat &o);
    BigFloat &operator=(BigFloat &&o) noexcept;
    ~BigFloat();

    // Decimal or a/b; throws ParseError.
    static BigFloat parse(std::string_view text, Precision p);
    static BigFloat pi(Precision p);
    static BigFloat infinity(Precision p);

    Precision precision() const { return Precision{static_cast<long>(mpfr_get_prec(v_))}; }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // Base-10 exponent e with 10^(e-1) <= |x| < 10^e (approximately); very negative for zero.
    long decimal_exponent() const;

    // Fixed-point decimal with `fraction_digits` digits after the point,
    // truncated toward zero.
    std::string to_fixed(long fraction_digits) const;
    // Scientific notation with `digits` significant digits, for diagnostics.
    std::string to_sci(int digits = 6) const;

    BigFloat &operator+=(const BigFloat &o);
    BigFloat &operator-=(const BigFloat &o);
    BigFloat &operator*=(const BigFloat &o);
    BigFloat &operator/=(const BigFloat &o);
    BigFloat &operator+=(long o);
    BigFloat &operator-=(long o);
    BigFloat &operator*=(long o);
    BigFloat &operator/=(long o);

    friend BigFloat operator+(const BigFloat &a, const BigFloat &b);
    friend BigFloat operator-(const BigFloat &a, const BigFloat &b);
    friend BigFloat operator*(const BigFloat &a, const BigFloat &b);
    friend BigFloat operator/(const BigFloat &a, const BigFloat &b);
    friend BigFloat operator+(BigFloat a, long b) { return a += b; }
    friend BigFloat operator-(BigFloat a, long b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, long b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, long b) { return a /= b; }
    friend BigFloat operator+(long a, BigFloat b) { return b += a; }
    friend BigFloat operator-(long a, const BigFloat &b);
    friend BigFloat operator*(long a, BigFloat b) { return b *= a; }
    friend BigFloat operator/(long a, const BigFloat &b);
    friend BigFloat operator-(const BigFloat &a);

    friend bool operator==(const BigFloat &a, const BigFloat &b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const BigFloat &a, const BigFloat &b);
    friend bool operator==(const BigFloat &a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
    friend std::partial_ordering operator<=>(const BigFloat &a, long b);

private:
    mpfr_t v_;
};

BigFloat abs(const BigFloat &x);
BigFloat sqrt(const BigFloat &x);
BigFloat exp(const BigFloat &x);
BigFloat expm1(const BigFloat &x);
BigFloat log(const BigFloat &x);
BigFloat log1p(const BigFloat &x);
BigFloat sin(const BigFloat &x);
BigFloat asin(const BigFloat &x);
BigFloat tan(const BigFloat &x);
BigFloat atan(const BigFloat &x);
BigFloat sinh(const BigFloat &x);
BigFloat asinh(const BigFloat &x);
BigFloat tanh(const BigFloat &x);
BigFloat atanh(const BigFloat &x);
BigFloat pow(const BigFloat &x, const BigFloat &y);
BigFloat pow(const BigFloat &x, long k);
// x^(1/k) for x >= 0
BigFloat root(const BigFloat &x, unsigned long k);
BigFloat max(const BigFloat &a, const BigFloat &b);
BigFloat min(const BigFloat &a, const BigFloat &b);

// 10^k at the given precision.
BigFloat power_of_ten(long k, Precision p);

// Number of leading significant digits on which two fixed-point decimal
// strings agree (signs and the position of the decimal point must match).
int agreeing_digits(std::string_view a, std::string_view b);

} // namespace abelkit
