#pragma once

#include <map>
#include <string>

#include "abelkit/power_series.hpp"
#include "abelkit/rational.hpp"

namespace abelkit {

// Rational Laurent series sum_{n<=N} c_n x^n with finitely many negative exponents.
class LaurentSeries {
public:
    LaurentSeries() = default;
    LaurentSeries(std::map<int, Rational> terms, int order);

    int order() const { return order_; }
    const std::map<int, Rational> &terms() const { return terms_; }
    Rational coefficient(int n) const;
    int valuation() const;

    // x^shift * s
    static LaurentSeries shifted(const RationalSeries &s, int shift);

    LaurentSeries derivative() const;

    friend bool operator==(const LaurentSeries &, const LaurentSeries &) = default;

private:
    std::map<int, Rational> terms_;
    int order_ = kExactOrder;
};

LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b);

// 1/a for a Rational series whose exact valuation is `valuation` (> 0 allowed).
// Known through order(a) - 2*valuation.
LaurentSeries laurent_reciprocal(const RationalSeries &a, int valuation);

// pole * x^(-tau) + log * ln(x) + sum_{m>=1} taylor_m x^(m*tau)
struct AbelForm {
    int tau = 1;
    Rational pole;
    Rational log;
    RationalSeries taylor;

    // Coefficient t_m of x^(m*tau).
    Rational taylor_coefficient(int m) const { return taylor.coefficient(m * tau); }
    // Largest m with t_m known.
    int last_index() const { return taylor.order() / tau; }

    // Formal derivative as a Laurent series (the ln term contributes log/x).
    LaurentSeries derivative() const;

    AbelForm negated() const { return AbelForm{tau, -pole, -log, -taylor}; }
};

// Term-by-term antiderivative of a series on the grid {-tau-1 + m*tau};
// x^(-1) integrates to ln x and the constant of integration is zero.
AbelForm integrate_with_log(const LaurentSeries &d, int tau);

} // namespace abelkit
