#include "abelkit/rational.hpp"

#include <cctype>

#include "abelkit/error.hpp"

namespace abelkit {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class &num, const mpz_class &den)
{
    if (den == 0)
        throw DomainError("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q))
{
    if (q_.get_den() == 0)
        throw DomainError("zero denominator");
    q_.canonicalize();
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero())
        throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const
{
    return Rational(1) / *this;
}

Rational Rational::pow(int k) const
{
    if (k < 0)
        return inverse().pow(-k);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(k));
    return Rational(n, d);
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw ParseError("malformed integer '" + std::string(s) + "'");
    mpz_class z(std::string(s), 10);
    return neg ? mpz_class(-z) : z;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty())
        throw ParseError("empty number");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash));
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text))
            throw ParseError("malformed denominator in '" + std::string(text) + "'");
        mpz_class den(std::string(den_text), 10);
        if (den == 0)
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }

    // decimal with optional exponent
    std::string_view mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = text.substr(0, e);
        mpz_class ez = parse_integer(text.substr(e + 1));
        if (!ez.fits_slong_p() || ::abs(ez) > 100000)
            throw ParseError("exponent out of range in '" + std::string(text) + "'");
        exponent = ez.get_si();
    }
    bool neg = false;
    if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
        neg = mantissa.front() == '-';
        mantissa.remove_prefix(1);
    }
    std::string digits;
    long frac_len = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        std::string_view ip = mantissa.substr(0, dot), fp = mantissa.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
            (!fp.empty() && !all_digits(fp)))
            throw ParseError("malformed decimal '" + std::string(text) + "'");
        digits = std::string(ip) + std::string(fp);
        frac_len = static_cast<long>(fp.size());
    } else {
        if (!all_digits(mantissa))
            throw ParseError("malformed number '" + std::string(text) + "'");
        digits = std::string(mantissa);
    }
    mpz_class num(digits, 10);
    if (neg)
        num = -num;
    long shift = exponent - frac_len;
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    return shift < 0 ? Rational(num, p) : Rational(mpz_class(num * p), mpz_class(1));
}

Rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(const Rational &top, unsigned k)
{
    Rational r(1);
    for (unsigned i = 0; i < k; ++i)
        r *= (top - Rational(static_cast<long>(i))) / Rational(static_cast<long>(i + 1));
    return r;
}

} // namespace abelkit
