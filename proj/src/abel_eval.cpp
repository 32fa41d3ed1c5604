#include "abelkit/abel_eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "abelkit/error.hpp"
#include "abelkit/root_find.hpp"

namespace abelkit {

namespace {

double log10_abs(const Rational &q)
{
    // numerator and denominator separately so huge coefficients do not overflow
    const double num = static_cast<double>(mpz_sizeinbase(q.numerator().get_mpz_t(), 2));
    const double den = static_cast<double>(mpz_sizeinbase(q.denominator().get_mpz_t(), 2));
    if (num < 900 && den < 900)
        return std::log10(std::abs(q.to_double()));
    BigFloat b(q.abs(), Precision{64});
    return log(b).to_double() / std::log(10.0);
}

long decimal_length(long n)
{
    long d = 1;
    while (n >= 10) {
        n /= 10;
        ++d;
    }
    return d;
}

} // namespace

Precision working_precision(int digits, long orbit_length)
{
    return Precision::from_digits(digits + 15 + 2 * decimal_length(std::max(orbit_length, 1L)));
}

BigFloat evaluate(const AbelForm &g, const BigFloat &x)
{
    const Precision p = x.precision();
    const BigFloat y = pow(x, static_cast<long>(g.tau));
    BigFloat acc(0L, p);
    for (int m = g.last_index(); m >= 1; --m) {
        acc *= y;
        const Rational t = g.taylor_coefficient(m);
        if (!t.is_zero())
            acc += BigFloat(t, p);
    }
    acc *= y;
    if (!g.pole.is_zero())
        acc += BigFloat(g.pole, p) / y;
    if (!g.log.is_zero())
        acc += BigFloat(g.log, p) * log(x);
    return acc;
}

BigFloat evaluate_derivative(const AbelForm &g, const BigFloat &x)
{
    const Precision p = x.precision();
    const BigFloat y = pow(x, static_cast<long>(g.tau));
    // sum m tau t_m x^(m tau - 1) = (tau / x) sum m t_m y^m
    BigFloat acc(0L, p);
    for (int m = g.last_index(); m >= 1; --m) {
        acc *= y;
        const Rational t = g.taylor_coefficient(m);
        if (!t.is_zero())
            acc += BigFloat(t * Rational(m), p);
    }
    acc *= y;
    acc *= static_cast<long>(g.tau);
    acc -= BigFloat(g.pole * Rational(g.tau), p) / y;
    acc += BigFloat(g.log, p);
    return acc / x;
}

BigFloat tail_magnitude(const AbelForm &g, const BigFloat &x, int count)
{
    const Precision p = x.precision();
    BigFloat total(0L, p);
    const int last = g.last_index();
    for (int m = last; m >= std::max(1, last - count + 1); --m) {
        const Rational t = g.taylor_coefficient(m);
        if (!t.is_zero())
            total += abs(BigFloat(t, p)) * pow(x, static_cast<long>(m * g.tau));
    }
    return total;
}

SeriesZone series_zone(const BaseFunction &fn, int digits, const EvalOptions &opts)
{
    if (digits < 1)
        throw DomainError("digits must be positive");
    const double log_tol = -(digits + opts.guard_digits);
    SeriesZone best;
    for (int K = opts.K_start;; K = std::min(K + opts.K_step, opts.K_max)) {
        auto ej = julia_series_cached(fn, K);
        const AbelForm &g = ej->abel;
        const int last = g.last_index();
        double log_r = std::log10(0.5);
        for (int m = std::max(1, last - 2); m <= last; ++m) {
            const Rational t = g.taylor_coefficient(m);
            if (t.is_zero())
                continue;
            const double lr = (log_tol - std::log10(3.0) - log10_abs(t)) / (m * g.tau);
            log_r = std::min(log_r, lr);
        }
        const double predicted = g.pole.to_double() * std::pow(10.0, -log_r * g.tau);
        best.ej = ej;
        best.predicted_orbit = predicted > 1e15 ? std::numeric_limits<long>::max() / 4
                                                : static_cast<long>(std::ceil(predicted));
        best.precision = working_precision(digits + opts.guard_digits, best.predicted_orbit);
        best.radius = pow(BigFloat(10L, best.precision), BigFloat(log_r, best.precision));
        if (best.predicted_orbit <= opts.orbit_budget || K >= opts.K_max)
            break;
    }
    if (best.predicted_orbit > opts.max_iterations)
        throw PrecisionUnreachable(fn.name + ": " + std::to_string(digits) +
                                   " digits would need an orbit of about " +
                                   std::to_string(best.predicted_orbit) + " steps");
    // the zone must lie inside the increasing branch
    best.radius = min(best.radius, fn.branch_end(best.precision) / 2);
    return best;
}

BigFloat orbit(const BaseFunction &fn, const BigFloat &x, long n, Precision p)
{
    if (n < 0)
        throw DomainError("negative orbit length");
    BigFloat z(x, p);
    for (long i = 0; i < n; ++i)
        z = eval_forward(fn, z);
    return z;
}

EvalResult abel_value(const BaseFunction &fn, const BigFloat &x, int digits, const EvalOptions &opts)
{
    if (x.sign() <= 0 || !in_basin(fn, x))
        throw OutOfBasin(fn.name + ": x = " + x.to_sci() + " is not in the basin");
    const SeriesZone zone = series_zone(fn, digits, opts);
    const AbelForm &g = zone.ej->abel;

    BigFloat z(x, zone.precision);
    long n = 0;
    while (z > zone.radius) {
        if (n >= opts.max_iterations)
            throw PrecisionUnreachable(fn.name + ": orbit did not reach the series zone");
        z = eval_forward(fn, z);
        ++n;
    }
    for (long i = 0; i < opts.extra_iterations; ++i, ++n)
        z = eval_forward(fn, z);

    EvalResult r;
    r.value = evaluate(g, z) - n;
    r.n_used = n;
    r.K_used = zone.ej->K;
    const BigFloat rounding = power_of_ten(-zone.precision.digits(), zone.precision) *
                              (abs(r.value) + static_cast<long>(n + 1)) * static_cast<long>(n + 1);
    r.error_estimate = tail_magnitude(g, z, 2) + rounding;
    if (r.error_estimate > power_of_ten(-digits, zone.precision))
        throw PrecisionUnreachable(fn.name + ": error estimate " + r.error_estimate.to_sci() + " exceeds 1e-" +
                                   std::to_string(digits));
    return r;
}

BigFloat abel_inverse(const BaseFunction &fn, const BigFloat &y, int digits, const EvalOptions &opts)
{
    const SeriesZone zone = series_zone(fn, digits, opts);
    const AbelForm &g = zone.ej->abel;
    const Precision p = zone.precision;
    const BigFloat target0(y, p);
    const BigFloat top = evaluate(g, BigFloat(zone.radius, p));

    long m = 0;
    if (target0 < top) {
        const BigFloat gap = top - target0;
        if (gap.to_double() > static_cast<double>(opts.max_iterations))
            throw PrecisionUnreachable(fn.name + ": abel_inverse would need " + gap.to_sci() + " steps");
        m = static_cast<long>(std::ceil(gap.to_double()));
        // guard against to_double rounding just below an integer
        while (target0 + m < top)
            ++m;
    }
    const BigFloat target = target0 + m;

    const RealFunction f = [&](const BigFloat &w) { return target - evaluate(g, w); };
    const RealFunction df = [&](const BigFloat &w) { return -evaluate_derivative(g, w); };

    const BigFloat hi(zone.radius, p);
    BigFloat seed = root(BigFloat(g.pole, p) / target, static_cast<unsigned long>(g.tau));
    seed = min(seed, hi);
    BigFloat lo = seed / 2;
    while (f(lo).sign() > 0)
        lo /= 2;
    BigFloat w = solve_increasing(f, df, lo, hi, seed);

    // w carries an error near 10^-digits, which may push it over the peak of theta
    const BigFloat peak = fn.image_end(p);
    const BigFloat slack = power_of_ten(-digits, p);
    for (long i = 0; i < m; ++i) {
        if (w > peak && w - peak < slack)
            w = peak;
        w = eval_inverse(fn, w);
    }
    return w;
}

BigFloat fractional_iterate(const BaseFunction &fn, const Rational &t, const BigFloat &x, int digits,
                            const EvalOptions &opts)
{
    if (t.is_zero())
        return x;
    const EvalResult gx = abel_value(fn, x, digits + 5, opts);
    return abel_inverse(fn, gx.value + BigFloat(t, gx.value.precision()), digits, opts);
}

BigFloat xexp_half(const BigFloat &x, int digits)
{
    if (x.is_zero())
        return x;
    if (x.sign() < 0)
        return -fractional_iterate(*catalog::lookup("xexp-neg"), Rational(1, 2), -x, digits);
    return fractional_iterate(*catalog::lookup("lambert-w"), Rational(-1, 2), x, digits);
}

BigFloat xplusinv_half(const BigFloat &x, int digits)
{
    if (x.sign() <= 0)
        throw DomainError("x + 1/x half-iterate needs x > 0");
    return 1L / fractional_iterate(*catalog::lookup("x-over-1px2"), Rational(1, 2), x, digits);
}

BigFloat f67(const BigFloat &x, int digits)
{
    if (x.is_zero())
        throw ZeroArgument("the Abel function of x*exp(x) has a pole at 0");
    if (x.sign() < 0)
        return abel_value(*catalog::lookup("xexp-neg"), -x, digits).value;
    return -abel_value(*catalog::lookup("lambert-w"), x, digits).value;
}

} // namespace abelkit
