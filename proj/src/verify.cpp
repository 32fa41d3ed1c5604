#include "abelkit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "abelkit/abel_eval.hpp"
#include "abelkit/ej_solver.hpp"
#include "abelkit/error.hpp"

namespace abelkit {

namespace {

Rational internal_coefficient(const EJResult &ej, const reference::SeriesTerm &t, reference::SeriesKind kind)
{
    using enum reference::SeriesKind;
    switch (kind) {
    case Lambda:
        return ej.lambda.coefficient(t.exponent);
    case AbelDerivative:
        return ej.abel_derivative.coefficient(t.exponent);
    case Abel:
        if (t.is_log)
            return ej.abel.log;
        if (t.exponent == -ej.tau)
            return ej.abel.pole;
        if (t.exponent <= 0 || t.exponent % ej.tau != 0)
            return Rational(0);
        return ej.abel.taylor_coefficient(t.exponent / ej.tau);
    }
    return Rational(0);
}

std::string term_label(const reference::SeriesTerm &t)
{
    return t.is_log ? std::string("ln") : "x^" + std::to_string(t.exponent);
}

} // namespace

VerifyRow verify_series(const reference::PublishedSeries &s, const BaseFunction &fn)
{
    VerifyRow row;
    row.category = "series";
    row.id = s.id;
    row.required = static_cast<int>(s.terms.size());
    row.expected = std::to_string(row.required) + " coefficients";
    const EJResult ej = julia_series(fn, kVerifySeriesK);
    std::string first_mismatch;
    for (const auto &t : s.terms) {
        Rational got;
        try {
            got = Rational(s.sign) * internal_coefficient(ej, t, s.kind);
        } catch (const BeyondTruncation &) {
            if (first_mismatch.empty())
                first_mismatch = term_label(t) + " beyond truncation";
            continue;
        }
        if (got == Rational::parse(t.value))
            ++row.matched;
        else if (first_mismatch.empty())
            first_mismatch = term_label(t) + ": " + got.str() + " (expected " + t.value + ")";
    }
    row.pass = row.matched == row.required;
    row.computed = row.pass ? "all equal" : first_mismatch;
    return row;
}

VerifyRow verify_series(const reference::PublishedSeries &s)
{
    return verify_series(s, *catalog::lookup(s.function));
}

BigFloat compute_constant(const reference::PublishedConstant &c, int digits)
{
    using enum reference::ConstantKind;
    const BigFloat x = reference::argument_value(c.argument, Precision::from_digits(digits + 30));
    switch (c.kind) {
    case Abel:
        return abel_value(*catalog::lookup(c.function), x, digits).value;
    case Principal: {
        const auto fn = catalog::lookup(c.function);
        if (!fn->delta_conjecture)
            throw DomainError(c.function + " has no delta closed form");
        const BigFloat g = abel_value(*fn, x, digits).value;
        return g - fn->delta_conjecture->evaluate(g.precision());
    }
    case XexpHalf:
        return xexp_half(x, digits);
    case XplusinvHalf:
        return xplusinv_half(x, digits);
    case HalfIterate:
        return fractional_iterate(*catalog::lookup(c.function), Rational(1, 2), x, digits);
    }
    throw DomainError("unknown constant kind");
}

VerifyRow verify_constant(const reference::PublishedConstant &c, int digits)
{
    // a few spare places so a carry just past the last digit cannot hide agreement
    const int shown = digits + 3;
    VerifyRow row;
    row.category = "constant";
    row.id = c.id;
    row.required = digits;
    const auto dot = c.digits.find('.');
    row.expected = c.digits.substr(0, std::min(c.digits.size(), dot + 1 + static_cast<std::size_t>(shown)));
    try {
        row.computed = compute_constant(c, shown).to_fixed(shown);
    } catch (const Error &e) {
        row.computed = e.what();
        return row;
    }
    row.matched = agreeing_digits(row.expected, row.computed);
    row.pass = row.matched >= row.required;
    return row;
}

unsigned verify_threads()
{
    if (const char *env = std::getenv("ABELKIT_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0)
            return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<VerifyRow> verify_all(int digits, unsigned threads)
{
    if (digits < 1 || digits > 60)
        throw DomainError("verify digits must be in 1..60");
    const auto &series = reference::series();
    const auto &constants = reference::constants();
    const std::size_t total = series.size() + constants.size();
    std::vector<VerifyRow> rows(total);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < total;) {
            const bool is_series = i < series.size();
            try {
                rows[i] = is_series ? verify_series(series[i])
                                    : verify_constant(constants[i - series.size()], digits);
            } catch (const std::exception &e) {
                rows[i].category = is_series ? "series" : "constant";
                rows[i].id = is_series ? series[i].id : constants[i - series.size()].id;
                rows[i].computed = e.what();
            }
        }
    };
    const unsigned n = std::min<unsigned>(threads ? threads : verify_threads(), static_cast<unsigned>(total));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto &t : pool)
        t.join();
    return rows;
}

} // namespace abelkit
