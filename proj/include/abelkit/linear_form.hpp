#pragma once

#include <ostream>
#include <string>

#include "abelkit/rational.hpp"

namespace abelkit {

// constant + slope*u for the single unknown u that one EJ step solves for.
// Products are exact as long as at most one factor depends on u.
class LinearForm {
public:
    LinearForm() = default;
    LinearForm(Rational constant) : constant_(std::move(constant)) {}
    template <std::integral I>
    LinearForm(I n) : constant_(n) {}
    LinearForm(Rational constant, Rational slope)
        : constant_(std::move(constant)), slope_(std::move(slope)) {}

    static LinearForm unknown() { return LinearForm(Rational(0), Rational(1)); }

    const Rational &constant() const { return constant_; }
    const Rational &slope() const { return slope_; }
    bool is_symbolic() const { return !slope_.is_zero(); }
    bool is_zero() const { return constant_.is_zero() && slope_.is_zero(); }

    // Value once u is known.
    Rational at(const Rational &u) const { return constant_ + slope_ * u; }

    std::string str() const;

    LinearForm &operator+=(const LinearForm &o);
    LinearForm &operator-=(const LinearForm &o);
    LinearForm &operator*=(const Rational &r);
    LinearForm &operator*=(const LinearForm &o);

    friend LinearForm operator+(LinearForm a, const LinearForm &b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm &b) { return a -= b; }
    friend LinearForm operator-(const LinearForm &a) { return LinearForm(-a.constant_, -a.slope_); }
    friend LinearForm operator*(LinearForm a, const LinearForm &b) { return a *= b; }
    friend LinearForm operator*(LinearForm a, const Rational &r) { return a *= r; }
    friend LinearForm operator*(const Rational &r, LinearForm a) { return a *= r; }
    friend LinearForm operator+(const Rational &r, const LinearForm &a) { return LinearForm(r) + a; }
    friend LinearForm operator+(const LinearForm &a, const Rational &r) { return a + LinearForm(r); }
    friend LinearForm operator-(const Rational &r, const LinearForm &a) { return LinearForm(r) - a; }
    friend LinearForm operator-(const LinearForm &a, const Rational &r) { return a - LinearForm(r); }

    friend bool operator==(const LinearForm &, const LinearForm &) = default;

    friend std::ostream &operator<<(std::ostream &os, const LinearForm &f) { return os << f.str(); }

private:
    Rational constant_;
    Rational slope_;
};

inline bool is_zero(const LinearForm &f) { return f.is_zero(); }

// Root of constant + slope*u = 0.
Rational solve_linear(const LinearForm &form);

} // namespace abelkit
