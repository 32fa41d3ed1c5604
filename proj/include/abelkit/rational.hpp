#pragma once

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace abelkit {

// Exact fraction in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I n) : q_(static_cast<long>(n)) {}

    Rational(long num, long den);
    Rational(const mpz_class &num, const mpz_class &den);
    explicit Rational(const mpz_class &n) : q_(n) {}
    explicit Rational(mpq_class q);

    // Accepts "a", "a/b" and plain decimals such as "-1.25" or "3e-2".
    static Rational parse(std::string_view text);

    const mpq_class &value() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    double to_double() const { return q_.get_d(); }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational inverse() const;
    Rational pow(int k) const;

    std::string str() const { return q_.get_str(); }

    Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
    Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
    Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

private:
    mpq_class q_{0};
};

inline bool is_zero(const Rational &r) { return r.is_zero(); }

Rational factorial(unsigned n);
Rational binomial(const Rational &top, unsigned k);

} // namespace abelkit
