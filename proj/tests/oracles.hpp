#pragma once

// Independent reference computations used only by the tests.

#include <vector>

#include "abelkit/bigfloat.hpp"
#include "abelkit/catalog.hpp"
#include "abelkit/power_series.hpp"

namespace oracle {

using abelkit::BaseFunction;
using abelkit::BigFloat;
using abelkit::Rational;
using abelkit::RationalSeries;

// phi = x + sum c_m x^(m tau + 1), known through x^order.
inline RationalSeries taylor_series(const BaseFunction &fn, int order)
{
    RationalSeries::term_map t{{1, Rational(1)}};
    for (int m = 1; m * fn.tau + 1 <= order; ++m)
        t.emplace(m * fn.tau + 1, abelkit::taylor_coefficient(fn, m));
    return RationalSeries(std::move(t), order);
}

// lambda(phi(x)) - phi'(x) lambda(x) through x^order, lambda taken as an exact polynomial.
inline RationalSeries julia_residual(const BaseFunction &fn, const RationalSeries &lambda, int order)
{
    const RationalSeries phi = taylor_series(fn, order + 1);
    const RationalSeries exact = lambda.with_order(abelkit::kExactOrder);
    return (abelkit::compose(exact, phi) - (phi.derivative() * exact)).truncated(order);
}

// v_2 .. v_{K-2} by matching coefficients of Julia's equation one order at a time.
// The unknown v_m first appears at x^(tau (m+1) + 1) with factor gamma tau (m - 1).
inline std::vector<Rational> matched_coefficients(const BaseFunction &fn, int K)
{
    const int tau = fn.tau;
    RationalSeries::term_map lam{{tau + 1, fn.gamma}};
    std::vector<Rational> v;
    for (int m = 2; m <= K - 2; ++m) {
        const int target = tau * (m + 1) + 1;
        const RationalSeries res = julia_residual(fn, RationalSeries(lam, abelkit::kExactOrder), target);
        const Rational vm = -res.coefficient(target) / (fn.gamma * Rational(tau * (m - 1)));
        v.push_back(vm);
        lam.emplace(tau * m + 1, vm);
    }
    return v;
}

// W(x) by plain Newton on w e^w - x from w = ln(1+x).
inline BigFloat lambert_w(const BigFloat &x)
{
    BigFloat w = abelkit::log1p(x);
    for (int i = 0; i < 400; ++i) {
        const BigFloat e = abelkit::exp(w);
        const BigFloat step = (w * e - x) / (e * (w + 1L));
        w -= step;
        if (step.is_zero() || abelkit::abs(step) < abelkit::abs(w) * abelkit::power_of_ten(-(x.precision().digits() + 5), x.precision()))
            break;
    }
    return w;
}

} // namespace oracle
