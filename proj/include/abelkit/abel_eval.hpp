#pragma once

#include <memory>

#include "abelkit/bigfloat.hpp"
#include "abelkit/catalog.hpp"
#include "abelkit/ej_solver.hpp"

namespace abelkit {

// Knobs for the adaptive evaluation of the Abel function.
struct EvalOptions {
    int K_start = 24;
    int K_step = 16;
    int K_max = 96;
    // Smallest K whose predicted orbit length fits this budget is chosen.
    long orbit_budget = 1L << 16;
    long max_iterations = 1'000'000;
    // the series tail must be below 10^-(digits + guard_digits)
    int guard_digits = 5;
    // Extra orbit steps beyond the stopping point (for independence checks).
    long extra_iterations = 0;
};

struct EvalResult {
    BigFloat value; // G(x) in the convention G(theta(x)) = G(x) + 1
    long n_used = 0;
    int K_used = 0;
    BigFloat error_estimate;
};

// Region (0, radius] where the truncated Abel series is trusted.
struct SeriesZone {
    std::shared_ptr<const EJResult> ej;
    BigFloat radius;
    long predicted_orbit = 0;
    Precision precision; // working precision for evaluations through this zone
};

SeriesZone series_zone(const BaseFunction &fn, int digits, const EvalOptions &opts = {});

// A x^-tau + B ln x + sum t_m x^(m tau) and its derivative, at the precision of x.
BigFloat evaluate(const AbelForm &g, const BigFloat &x);
BigFloat evaluate_derivative(const AbelForm &g, const BigFloat &x);
// |t_m| x^(m tau) summed over the last `count` retained terms.
BigFloat tail_magnitude(const AbelForm &g, const BigFloat &x, int count = 2);

// theta^n(x) at precision p.
BigFloat orbit(const BaseFunction &fn, const BigFloat &x, long n, Precision p);

// G(x) to `digits` decimal places: walk the orbit into the series zone,
// evaluate the series there and subtract the number of steps.
EvalResult abel_value(const BaseFunction &fn, const BigFloat &x, int digits, const EvalOptions &opts = {});

// z with G(z) = y on the increasing branch of theta.
BigFloat abel_inverse(const BaseFunction &fn, const BigFloat &y, int digits, const EvalOptions &opts = {});

// theta^[t](x) = G^-1(G(x) + t)
BigFloat fractional_iterate(const BaseFunction &fn, const Rational &t, const BigFloat &x, int digits,
                            const EvalOptions &opts = {});

// Compositional square root of x*exp(x) on the real line.
BigFloat xexp_half(const BigFloat &x, int digits);
// Compositional square root of x + 1/x for x > 0.
BigFloat xplusinv_half(const BigFloat &x, int digits);
// Abel function of x*exp(x) on both sides of 0: G_6(-x) for x < 0, -G_7(x) for x > 0.
BigFloat f67(const BigFloat &x, int digits);

// Working precision used for a `digits`-place evaluation with an orbit of length n.
Precision working_precision(int digits, long orbit_length);

} // namespace abelkit
