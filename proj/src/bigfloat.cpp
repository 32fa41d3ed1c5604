#include "abelkit/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "abelkit/error.hpp"

namespace abelkit {

namespace {

constexpr double kLog2Of10 = 3.3219280948873623;

mpfr_prec_t bits_of(const Precision &p)
{
    return static_cast<mpfr_prec_t>(std::clamp<long>(p.bits, MPFR_PREC_MIN, 1L << 24));
}

mpfr_prec_t wider(const BigFloat &a, const BigFloat &b)
{
    return std::max(mpfr_get_prec(a.get()), mpfr_get_prec(b.get()));
}

template <class F>
BigFloat unary(const BigFloat &x, F f)
{
    BigFloat r(x.precision());
    f(r.get(), x.get(), MPFR_RNDN);
    return r;
}

} // namespace

Precision Precision::from_digits(long decimal_digits)
{
    return Precision{static_cast<long>(std::ceil(static_cast<double>(decimal_digits) * kLog2Of10)) + 8};
}

long Precision::digits() const
{
    return static_cast<long>(std::floor(static_cast<double>(bits) / kLog2Of10));
}

BigFloat::BigFloat(Precision p)
{
    mpfr_init2(v_, bits_of(p));
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long v, Precision p) : BigFloat(p)
{
    mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational &r, Precision p) : BigFloat(p)
{
    mpfr_set_q(v_, r.value().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(double v, Precision p) : BigFloat(p)
{
    mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat &o)
{
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat &o, Precision p) : BigFloat(p)
{
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat &&o) noexcept
{
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

BigFloat &BigFloat::operator=(const BigFloat &o)
{
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat &BigFloat::operator=(BigFloat &&o) noexcept
{
    mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat()
{
    mpfr_clear(v_);
}

BigFloat BigFloat::parse(std::string_view text, Precision p)
{
    // Exact rational parse first, so "1/3" and "0.1" are rounded once.
    return BigFloat(Rational::parse(text), p);
}

BigFloat BigFloat::pi(Precision p)
{
    BigFloat r(p);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::infinity(Precision p)
{
    BigFloat r(p);
    mpfr_set_inf(r.v_, 1);
    return r;
}

long BigFloat::decimal_exponent() const
{
    if (!is_finite() || is_zero())
        return is_zero() ? -(1L << 30) : (1L << 30);
    long e2 = 0;
    double m = mpfr_get_d_2exp(&e2, v_, MPFR_RNDN);
    return static_cast<long>(std::floor((std::log10(std::fabs(m)) + static_cast<double>(e2) * std::log10(2.0)))) + 1;
}

std::string BigFloat::to_fixed(long fraction_digits) const
{
    if (!is_finite())
        return mpfr_nan_p(v_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
    const std::string zero = fraction_digits > 0 ? "0." + std::string(static_cast<std::size_t>(fraction_digits), '0') : "0";
    if (is_zero())
        return zero;

    const std::string sign_text = sign() < 0 ? "-" : "";
    mpfr_exp_t e = 0;
    char *probe = mpfr_get_str(nullptr, &e, 10, 2, v_, MPFR_RNDZ);
    mpfr_free_str(probe);
    const long wanted = static_cast<long>(e) + fraction_digits;
    if (wanted <= 0)
        return sign_text + zero;

    mpfr_exp_t e2 = 0;
    char *raw = mpfr_get_str(nullptr, &e2, 10, static_cast<std::size_t>(std::max(wanted, 2L)), v_, MPFR_RNDZ);
    std::string digits(raw);
    mpfr_free_str(raw);
    if (!digits.empty() && digits.front() == '-')
        digits.erase(0, 1);
    digits.resize(static_cast<std::size_t>(wanted));

    std::string out;
    if (e2 <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-e2), '0') + digits;
        out.resize(static_cast<std::size_t>(2 + fraction_digits));
    } else {
        out = digits.substr(0, static_cast<std::size_t>(e2));
        if (fraction_digits > 0)
            out += "." + digits.substr(static_cast<std::size_t>(e2));
    }
    return sign_text + out;
}

std::string BigFloat::to_sci(int digits) const
{
    char *buf = nullptr;
    std::string fmt = "%." + std::to_string(std::max(digits - 1, 0)) + "Re";
    mpfr_asprintf(&buf, fmt.c_str(), v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

BigFloat &BigFloat::operator+=(const BigFloat &o)
{
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_))
        mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat &BigFloat::operator-=(const BigFloat &o)
{
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_))
        mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat &BigFloat::operator*=(const BigFloat &o)
{
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_))
        mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat &BigFloat::operator/=(const BigFloat &o)
{
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_))
        mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat &BigFloat::operator+=(long o)
{
    mpfr_add_si(v_, v_, o, MPFR_RNDN);
    return *this;
}

BigFloat &BigFloat::operator-=(long o)
{
    mpfr_sub_si(v_, v_, o, MPFR_RNDN);
    return *this;
}

BigFloat &BigFloat::operator*=(long o)
{
    mpfr_mul_si(v_, v_, o, MPFR_RNDN);
    return *this;
}

BigFloat &BigFloat::operator/=(long o)
{
    mpfr_div_si(v_, v_, o, MPFR_RNDN);
    return *this;
}

BigFloat operator+(const BigFloat &a, const BigFloat &b)
{
    BigFloat r(Precision{static_cast<long>(wider(a, b))});
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat &a, const BigFloat &b)
{
    BigFloat r(Precision{static_cast<long>(wider(a, b))});
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat &a, const BigFloat &b)
{
    BigFloat r(Precision{static_cast<long>(wider(a, b))});
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat &a, const BigFloat &b)
{
    BigFloat r(Precision{static_cast<long>(wider(a, b))});
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(long a, const BigFloat &b)
{
    BigFloat r(b.precision());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(long a, const BigFloat &b)
{
    BigFloat r(b.precision());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat &a)
{
    BigFloat r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const BigFloat &a, const BigFloat &b)
{
    if (mpfr_unordered_p(a.v_, b.v_))
        return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const BigFloat &a, long b)
{
    if (mpfr_nan_p(a.v_))
        return std::partial_ordering::unordered;
    int c = mpfr_cmp_si(a.v_, b);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigFloat abs(const BigFloat &x) { return unary(x, mpfr_abs); }
BigFloat sqrt(const BigFloat &x) { return unary(x, mpfr_sqrt); }
BigFloat exp(const BigFloat &x) { return unary(x, mpfr_exp); }
BigFloat expm1(const BigFloat &x) { return unary(x, mpfr_expm1); }
BigFloat log(const BigFloat &x) { return unary(x, mpfr_log); }
BigFloat log1p(const BigFloat &x) { return unary(x, mpfr_log1p); }
BigFloat sin(const BigFloat &x) { return unary(x, mpfr_sin); }
BigFloat asin(const BigFloat &x) { return unary(x, mpfr_asin); }
BigFloat tan(const BigFloat &x) { return unary(x, mpfr_tan); }
BigFloat atan(const BigFloat &x) { return unary(x, mpfr_atan); }
BigFloat sinh(const BigFloat &x) { return unary(x, mpfr_sinh); }
BigFloat asinh(const BigFloat &x) { return unary(x, mpfr_asinh); }
BigFloat tanh(const BigFloat &x) { return unary(x, mpfr_tanh); }
BigFloat atanh(const BigFloat &x) { return unary(x, mpfr_atanh); }

BigFloat pow(const BigFloat &x, const BigFloat &y)
{
    BigFloat r(Precision{static_cast<long>(wider(x, y))});
    mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat &x, long k)
{
    BigFloat r(x.precision());
    mpfr_pow_si(r.get(), x.get(), k, MPFR_RNDN);
    return r;
}

BigFloat root(const BigFloat &x, unsigned long k)
{
    BigFloat r(x.precision());
    mpfr_rootn_ui(r.get(), x.get(), k, MPFR_RNDN);
    return r;
}

BigFloat max(const BigFloat &a, const BigFloat &b) { return a < b ? b : a; }
BigFloat min(const BigFloat &a, const BigFloat &b) { return b < a ? b : a; }

BigFloat power_of_ten(long k, Precision p)
{
    BigFloat r(10L, p);
    mpfr_pow_si(r.get(), r.get(), k, MPFR_RNDN);
    return r;
}

int agreeing_digits(std::string_view a, std::string_view b)
{
    auto strip_sign = [](std::string_view &s) {
        bool neg = !s.empty() && s.front() == '-';
        if (neg)
            s.remove_prefix(1);
        return neg;
    };
    if (strip_sign(a) != strip_sign(b))
        return 0;
    if (a.find('.') != b.find('.'))
        return 0;
    int count = 0;
    bool significant = false;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a[i] == '.') {
            if (b[i] != '.')
                break;
            continue;
        }
        if (a[i] != b[i])
            break;
        if (a[i] != '0')
            significant = true;
        if (significant)
            ++count;
    }
    return count;
}

} // namespace abelkit
