#include "abelkit/abel_form.hpp"

#include <algorithm>
#include <vector>

#include "abelkit/error.hpp"

namespace abelkit {

namespace {

int add_orders(int a, int b)
{
    if (a >= kExactOrder || b >= kExactOrder)
        return kExactOrder;
    return a + b;
}

} // namespace

LaurentSeries::LaurentSeries(std::map<int, Rational> terms, int order)
    : terms_(std::move(terms)), order_(order)
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first > order_ || it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

Rational LaurentSeries::coefficient(int n) const
{
    if (n > order_)
        throw BeyondTruncation("x^" + std::to_string(n) + " lies beyond truncation order " +
                               std::to_string(order_));
    auto it = terms_.find(n);
    return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentSeries::valuation() const
{
    return terms_.empty() ? add_orders(order_, 1) : terms_.begin()->first;
}

LaurentSeries LaurentSeries::shifted(const RationalSeries &s, int shift)
{
    std::map<int, Rational> t;
    for (const auto &[n, c] : s.terms())
        t.emplace(n + shift, c);
    return LaurentSeries(std::move(t), add_orders(s.order(), shift));
}

LaurentSeries LaurentSeries::derivative() const
{
    std::map<int, Rational> t;
    for (const auto &[n, c] : terms_)
        if (n != 0)
            t.emplace(n - 1, c * Rational(n));
    return LaurentSeries(std::move(t), order_ >= kExactOrder ? kExactOrder : order_ - 1);
}

LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b)
{
    const int order = std::min(add_orders(a.order(), b.valuation()), add_orders(b.order(), a.valuation()));
    std::map<int, Rational> t;
    for (const auto &[i, ca] : a.terms())
        for (const auto &[j, cb] : b.terms()) {
            if (i + j > order)
                break;
            t[i + j] += ca * cb;
        }
    return LaurentSeries(std::move(t), order);
}

LaurentSeries laurent_reciprocal(const RationalSeries &a, int valuation)
{
    if (valuation > a.order() || a.coefficient(valuation).is_zero())
        throw ZeroLeadingCoefficient("no nonzero coefficient at x^" + std::to_string(valuation));
    if (a.valuation() < valuation)
        throw ZeroLeadingCoefficient("series has a lower-order term at x^" +
                                     std::to_string(a.valuation()));
    if (a.is_exact() && a.degree() > valuation)
        throw DomainError("laurent_reciprocal of a polynomial needs a truncation order");

    // a = x^v * unit, 1/a = x^(-v) / unit
    RationalSeries::term_map unit_terms;
    for (const auto &[n, c] : a.terms())
        unit_terms.emplace(n - valuation, c);
    RationalSeries unit(std::move(unit_terms), a.is_exact() ? kExactOrder : a.order() - valuation);
    RationalSeries inv = a.is_exact() ? RationalSeries::monomial(unit.coefficient(0).inverse(), 0)
                                      : reciprocal(unit);
    return LaurentSeries::shifted(inv, -valuation);
}

LaurentSeries AbelForm::derivative() const
{
    std::map<int, Rational> t;
    t.emplace(-tau - 1, pole * Rational(-tau));
    t.emplace(-1, log);
    for (const auto &[n, c] : taylor.terms())
        t.emplace(n - 1, c * Rational(n));
    return LaurentSeries(std::move(t), taylor.is_exact() ? kExactOrder : taylor.order() - 1);
}

AbelForm integrate_with_log(const LaurentSeries &d, int tau)
{
    if (tau < 1)
        throw DomainError("tau must be positive");
    AbelForm g;
    g.tau = tau;
    RationalSeries::term_map taylor;
    for (const auto &[n, c] : d.terms()) {
        // grid: n = -tau-1 + j*tau, j >= 0
        const int shifted = n + tau + 1;
        if (shifted < 0 || shifted % tau != 0)
            throw GridMismatch("coefficient at x^" + std::to_string(n) + " is off the grid for tau=" +
                               std::to_string(tau));
        if (n == -tau - 1)
            g.pole = c / Rational(-tau);
        else if (n == -1)
            g.log = c;
        else
            taylor.emplace(n + 1, c / Rational(n + 1));
    }
    const int order = d.order() >= kExactOrder ? kExactOrder : d.order() + 1;
    if (order < 0)
        throw BeyondTruncation("derivative series does not reach x^-1");
    g.taylor = RationalSeries(std::move(taylor), order);
    return g;
}

} // namespace abelkit
