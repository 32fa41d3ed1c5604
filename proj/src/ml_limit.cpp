#include "abelkit/ml_limit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "abelkit/abel_eval.hpp"
#include "abelkit/ej_solver.hpp"
#include "abelkit/error.hpp"

namespace abelkit {

BigFloat Surd::value(Precision p) const
{
    return root(BigFloat(radicand, p), static_cast<unsigned long>(index));
}

std::string Surd::str() const
{
    if (index == 1 || radicand == Rational(1))
        return radicand.str();
    if (index == 2)
        return "sqrt(" + radicand.str() + ")";
    return "(" + radicand.str() + ")^(1/" + std::to_string(index) + ")";
}

MLFormula MLFormula::from_series(const AbelForm &g, const Rational &gamma)
{
    MLFormula f;
    f.tau = g.tau;
    f.prefactor = Rational(g.tau);
    f.scale = Surd{(-gamma * Rational(g.tau)).inverse(), g.tau};
    f.log_coefficient = g.log;
    f.log_kappa = g.log / Rational(g.tau * g.tau);
    return f;
}

MLFormula MLFormula::for_function(const BaseFunction &fn)
{
    return from_series(julia_series_cached(fn, 12)->abel, fn.gamma);
}

std::string MLFormula::str() const
{
    auto power = [this](int num) {
        Rational e(num, tau);
        if (e == Rational(1))
            return std::string("n");
        return e.is_integer() ? "n^" + e.str() : "n^(" + e.str() + ")";
    };
    std::string out = "-";
    if (prefactor != Rational(1))
        out += prefactor.str() + " ";
    out += power(tau + 1) + " (";
    if (scale.radicand == Rational(1))
        out += "x_n";
    else if (scale.radicand.is_integer())
        out += "x_n/" + scale.str();
    else
        out += Surd{scale.radicand.inverse(), scale.index}.str() + " x_n";
    out += " - 1/" + power(1);
    if (!log_kappa.is_zero()) {
        out += log_kappa.sign() > 0 ? " + " : " - ";
        const Rational k = log_kappa.abs();
        out += (k == Rational(1) ? std::string() : k.str() + " ") + "ln(n)/" + power(tau + 1);
    }
    return out + ")";
}

BigFloat ml_term(const MLFormula &f, const BigFloat &x_n, long n)
{
    const Precision p = x_n.precision();
    const BigFloat nn(n, p);
    const BigFloat r = root(nn, static_cast<unsigned long>(f.tau));
    // -P (n n^(1/tau) x_n / s - n + kappa ln n)
    BigFloat inner = nn * r * x_n / f.scale.value(p) - nn;
    if (!f.log_kappa.is_zero())
        inner += BigFloat(f.log_kappa, p) * log(nn);
    return -(BigFloat(f.prefactor, p) * inner);
}

BigFloat ml_sequence(const BaseFunction &fn, const BigFloat &x, long n, Precision p)
{
    if (n < 2)
        throw DomainError("ml_sequence needs n >= 2");
    if (x.sign() <= 0 || !in_basin(fn, x))
        throw OutOfBasin(fn.name + ": x = " + x.to_sci() + " is not in the basin");
    return ml_term(MLFormula::for_function(fn), orbit(fn, x, n, p), n);
}

namespace {

BigFloat xplusinv_term(const BigFloat &x_n, long n)
{
    const Precision p = x_n.precision();
    const BigFloat nn(n, p);
    const BigFloat r = sqrt(nn);
    // n^(1/2) (sqrt(2) x_n - 2 n^(1/2)) - (1/4) ln n
    return r * (sqrt(BigFloat(2L, p)) * x_n - 2L * r) - log(nn) / 4L;
}

} // namespace

BigFloat ml_sequence_xplusinv(const BigFloat &x, long n, Precision p)
{
    if (n < 2)
        throw DomainError("ml_sequence needs n >= 2");
    if (x.sign() <= 0)
        throw OutOfBasin("x + 1/x: x must be positive");
    BigFloat z(x, p);
    for (long i = 0; i < n; ++i)
        z += 1L / z;
    return xplusinv_term(z, n);
}

std::vector<long> sample_grid(long n_max)
{
    const long n_min = std::max(8L, n_max / 256);
    std::set<long> grid;
    for (int i = 0;; ++i) {
        const long n = std::lround(static_cast<double>(n_max) * std::exp2(-i / 8.0));
        if (n < n_min)
            break;
        grid.insert(n);
    }
    return {grid.begin(), grid.end()};
}

namespace {

int unknowns(int model_order)
{
    int count = 1;
    for (int j = 1; j <= model_order; ++j)
        count += j + 2;
    return count;
}

// Householder QR least squares; columns are pre-scaled to unit norm.
BigFloat fitted_constant(const std::vector<std::pair<long, BigFloat>> &samples, int model_order)
{
    const Precision p = samples.front().second.precision();
    const std::size_t rows = samples.size();
    const std::size_t cols = static_cast<std::size_t>(unknowns(model_order));

    std::vector<std::vector<BigFloat>> a(rows, std::vector<BigFloat>(cols, BigFloat(0L, p)));
    std::vector<BigFloat> b;
    for (std::size_t i = 0; i < rows; ++i) {
        const BigFloat n(samples[i].first, p);
        const BigFloat ln = log(n);
        std::size_t c = 0;
        a[i][c++] = BigFloat(1L, p);
        for (int j = 1; j <= model_order; ++j) {
            BigFloat base = 1L / pow(n, static_cast<long>(j));
            for (int l = 0; l <= j + 1; ++l) {
                a[i][c++] = base;
                base *= ln;
            }
        }
        b.push_back(BigFloat(samples[i].second, p));
    }
    std::vector<BigFloat> scale(cols, BigFloat(0L, p));
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t i = 0; i < rows; ++i)
            scale[c] += a[i][c] * a[i][c];
        scale[c] = sqrt(scale[c]);
        for (std::size_t i = 0; i < rows; ++i)
            a[i][c] /= scale[c];
    }

    for (std::size_t k = 0; k < cols; ++k) {
        BigFloat norm(0L, p);
        for (std::size_t i = k; i < rows; ++i)
            norm += a[i][k] * a[i][k];
        norm = sqrt(norm);
        if (norm.is_zero())
            throw DegenerateSolve("extrapolation basis is rank deficient");
        const BigFloat alpha = a[k][k].sign() > 0 ? -norm : norm;
        std::vector<BigFloat> v(rows, BigFloat(0L, p));
        for (std::size_t i = k; i < rows; ++i)
            v[i] = a[i][k];
        v[k] -= alpha;
        BigFloat vv(0L, p);
        for (std::size_t i = k; i < rows; ++i)
            vv += v[i] * v[i];
        if (vv.is_zero())
            continue;
        for (std::size_t c = k; c < cols; ++c) {
            BigFloat dot(0L, p);
            for (std::size_t i = k; i < rows; ++i)
                dot += v[i] * a[i][c];
            const BigFloat f = 2L * dot / vv;
            for (std::size_t i = k; i < rows; ++i)
                a[i][c] -= f * v[i];
        }
        BigFloat dot(0L, p);
        for (std::size_t i = k; i < rows; ++i)
            dot += v[i] * b[i];
        const BigFloat f = 2L * dot / vv;
        for (std::size_t i = k; i < rows; ++i)
            b[i] -= f * v[i];
    }
    std::vector<BigFloat> x(cols, BigFloat(0L, p));
    for (std::size_t k = cols; k-- > 0;) {
        BigFloat s = b[k];
        for (std::size_t c = k + 1; c < cols; ++c)
            s -= a[k][c] * x[c];
        x[k] = s / a[k][k];
    }
    return x[0] / scale[0];
}

} // namespace

MLEstimate extrapolate_limit(const std::vector<std::pair<long, BigFloat>> &samples, int model_order)
{
    if (model_order < 1)
        throw DomainError("model_order must be at least 1");
    const int need = unknowns(model_order) + 2;
    if (static_cast<int>(samples.size()) < need)
        throw InsufficientSamples(std::to_string(samples.size()) + " samples for a model with " +
                                  std::to_string(need - 2) + " unknowns");
    MLEstimate e;
    e.value = fitted_constant(samples, model_order);
    e.error_bar = abs(e.value - fitted_constant(samples, model_order - 1));
    e.model_order = model_order;
    e.samples = static_cast<int>(samples.size());
    e.n_max = samples.back().first;
    return e;
}

namespace {

MLEstimate collect(long n_max, int model_order, int digits, BigFloat z,
                   const std::function<void(BigFloat &)> &step,
                   const std::function<BigFloat(const BigFloat &, long)> &term)
{
    if (n_max < 64)
        throw InsufficientSamples("n_max must be at least 64");
    const std::vector<long> grid = sample_grid(n_max);
    std::vector<std::pair<long, BigFloat>> samples;
    z = BigFloat(z, Precision::from_digits(digits));
    std::size_t next = 0;
    for (long n = 1; n <= n_max && next < grid.size(); ++n) {
        step(z);
        if (n == grid[next]) {
            samples.emplace_back(n, term(z, n));
            ++next;
        }
    }
    return extrapolate_limit(samples, model_order);
}

} // namespace

MLEstimate ml_value(const BaseFunction &fn, const BigFloat &x, long n_max, int model_order, int digits)
{
    if (x.sign() <= 0 || !in_basin(fn, x))
        throw OutOfBasin(fn.name + ": x = " + x.to_sci() + " is not in the basin");
    const MLFormula f = MLFormula::for_function(fn);
    return collect(
        n_max, model_order, digits, x, [&](BigFloat &z) { z = eval_forward(fn, z); },
        [&](const BigFloat &z, long n) { return ml_term(f, z, n); });
}

MLEstimate ml_value_xplusinv(const BigFloat &x, long n_max, int model_order, int digits)
{
    if (x.sign() <= 0)
        throw OutOfBasin("x + 1/x: x must be positive");
    return collect(
        n_max, model_order, digits, x, [](BigFloat &z) { z += 1L / z; },
        [](const BigFloat &z, long n) { return xplusinv_term(z, n); });
}

LogMultiple delta_hypothesis(const BaseFunction &fn)
{
    const MLFormula f = MLFormula::for_function(fn);
    const Rational tau(fn.tau);
    return LogMultiple{-f.log_coefficient / tau, -fn.gamma * tau}.canonical();
}

DeltaReport delta_estimate(const BaseFunction &fn, const BigFloat &x, long n_max)
{
    DeltaReport r;
    r.function = fn.name;
    r.n_max = n_max;
    r.ml = ml_value(fn, x, n_max);
    const Precision p = r.ml.value.precision();
    r.x = BigFloat(x, p);
    r.ej_value = BigFloat(abel_value(fn, x, 30).value, p);
    r.delta_estimate = r.ej_value - r.ml.value;
    r.hypothesis = delta_hypothesis(fn);
    r.delta_hypothesis = r.hypothesis.evaluate(p);
    r.discrepancy_hypothesis = abs(r.delta_estimate - r.delta_hypothesis);
    if (fn.delta_conjecture) {
        r.conjectured = fn.delta_conjecture->canonical();
        r.delta_conjectured = r.conjectured->evaluate(p);
        r.discrepancy_conjectured = abs(r.delta_estimate - *r.delta_conjectured);
    }
    return r;
}

} // namespace abelkit
