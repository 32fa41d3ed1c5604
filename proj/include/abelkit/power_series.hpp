#pragma once

#include <algorithm>
#include <concepts>
#include <limits>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "abelkit/error.hpp"
#include "abelkit/linear_form.hpp"
#include "abelkit/rational.hpp"

namespace abelkit {

// Truncation order of a series with no unknown coefficients (a polynomial).
inline constexpr int kExactOrder = std::numeric_limits<int>::max() / 4;

namespace detail {

inline int saturating_add(int a, int b)
{
    if (a >= kExactOrder || b >= kExactOrder)
        return kExactOrder;
    return std::min(kExactOrder, a + b);
}

template <class S>
bool symbolic(const S &) { return false; }
inline bool symbolic(const LinearForm &f) { return f.is_symbolic(); }

} // namespace detail

template <class S>
concept SeriesScalar = requires(S a, const S &b) {
    { is_zero(b) } -> std::convertible_to<bool>;
    a += b;
    a -= b;
    -b;
};

// Truncated formal power series sum_{n<=N} c_n x^n over a scalar ring.
// Exponents above the truncation order N are unknown, not zero; absent
// exponents up to N are exactly zero. Only nonzero coefficients are stored.
template <SeriesScalar S>
class PowerSeries {
public:
    using scalar_type = S;
    using term_map = std::map<int, S>;

    // The exact zero polynomial.
    PowerSeries() = default;

    // Zero known through x^order.
    explicit PowerSeries(int order) : order_(order) {}

    PowerSeries(term_map terms, int order) : terms_(std::move(terms)), order_(order)
    {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->first < 0)
                throw DomainError("negative exponent " + std::to_string(it->first) + " in power series");
            if (it->first > order_ || is_zero(it->second))
                it = terms_.erase(it);
            else
                ++it;
        }
    }

    static PowerSeries monomial(S c, int exponent, int order = kExactOrder)
    {
        term_map t;
        t.emplace(exponent, std::move(c));
        return PowerSeries(std::move(t), order);
    }

    static PowerSeries one(int order = kExactOrder) { return monomial(S(1), 0, order); }
    static PowerSeries identity(int order = kExactOrder) { return monomial(S(1), 1, order); }

    int order() const { return order_; }
    bool is_exact() const { return order_ >= kExactOrder; }
    const term_map &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    // [x^n] of the series.
    S coefficient(int n) const
    {
        if (n > order_)
            throw BeyondTruncation("x^" + std::to_string(n) + " lies beyond truncation order " +
                                   std::to_string(order_));
        auto it = terms_.find(n);
        return it == terms_.end() ? S(0) : it->second;
    }

    // Smallest exponent with a nonzero coefficient; order()+1 if every known one vanishes.
    int valuation() const
    {
        return terms_.empty() ? detail::saturating_add(order_, 1) : terms_.begin()->first;
    }

    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

    bool is_symbolic() const
    {
        return std::any_of(terms_.begin(), terms_.end(),
                           [](const auto &t) { return detail::symbolic(t.second); });
    }

    PowerSeries truncated(int order) const
    {
        return PowerSeries(terms_, std::min(order, order_));
    }

    // Same stored terms, different claim about how far they are known.
    PowerSeries with_order(int order) const { return PowerSeries(terms_, order); }

    PowerSeries derivative() const
    {
        term_map t;
        for (const auto &[n, c] : terms_)
            if (n > 0) {
                S d = c;
                d *= Rational(n);
                t.emplace(n - 1, std::move(d));
            }
        return PowerSeries(std::move(t), is_exact() ? kExactOrder : order_ - 1);
    }

    template <class F>
    auto map_coefficients(F &&f) const
    {
        using T = decltype(f(std::declval<const S &>()));
        typename PowerSeries<T>::term_map t;
        for (const auto &[n, c] : terms_)
            t.emplace(n, f(c));
        return PowerSeries<T>(std::move(t), order_);
    }

    template <class T>
    PowerSeries<T> convert() const
    {
        return map_coefficients([](const S &c) { return T(c); });
    }

    PowerSeries &operator+=(const PowerSeries &o) { return accumulate(o, 1); }
    PowerSeries &operator-=(const PowerSeries &o) { return accumulate(o, -1); }

    friend PowerSeries operator-(const PowerSeries &a)
    {
        return a.map_coefficients([](const S &c) { return S(-c); });
    }

    friend bool operator==(const PowerSeries &, const PowerSeries &) = default;

private:
    PowerSeries &accumulate(const PowerSeries &o, int sign)
    {
        order_ = std::min(order_, o.order_);
        for (auto it = terms_.upper_bound(order_); it != terms_.end();)
            it = terms_.erase(it);
        for (const auto &[n, c] : o.terms_) {
            if (n > order_)
                break;
            auto [it, inserted] = terms_.try_emplace(n, S(0));
            if (sign > 0)
                it->second += c;
            else
                it->second -= c;
            if (is_zero(it->second))
                terms_.erase(it);
        }
        return *this;
    }

    term_map terms_;
    int order_ = kExactOrder;
};

template <class A, class B>
using sum_t = decltype(std::declval<A>() + std::declval<B>());
template <class A, class B>
using product_t = decltype(std::declval<A>() * std::declval<B>());

// Coefficientwise sum; the result is known through min(N_a, N_b).
template <class A, class B>
PowerSeries<sum_t<A, B>> operator+(const PowerSeries<A> &a, const PowerSeries<B> &b)
{
    auto r = a.template convert<sum_t<A, B>>();
    r += b.template convert<sum_t<A, B>>();
    return r;
}

template <class A, class B>
PowerSeries<sum_t<A, B>> operator-(const PowerSeries<A> &a, const PowerSeries<B> &b)
{
    auto r = a.template convert<sum_t<A, B>>();
    r -= b.template convert<sum_t<A, B>>();
    return r;
}

template <class T>
struct is_power_series : std::false_type {};
template <class S>
struct is_power_series<PowerSeries<S>> : std::true_type {};

template <class A, class T>
    requires(!is_power_series<T>::value)
PowerSeries<product_t<A, T>> operator*(const PowerSeries<A> &a, const T &scalar)
{
    return a.map_coefficients([&](const A &c) { return product_t<A, T>(c * scalar); });
}

template <class T, class A>
    requires(!is_power_series<T>::value)
PowerSeries<product_t<T, A>> operator*(const T &scalar, const PowerSeries<A> &a)
{
    return a.map_coefficients([&](const A &c) { return product_t<T, A>(scalar * c); });
}

// Truncation order of a product: each factor's unknown tail is shifted by
// the other factor's valuation.
template <class A, class B>
int product_order(const PowerSeries<A> &a, const PowerSeries<B> &b)
{
    return std::min(detail::saturating_add(a.order(), b.valuation()),
                    detail::saturating_add(b.order(), a.valuation()));
}

// Cauchy product truncated at product_order(a, b).
template <class A, class B>
PowerSeries<product_t<A, B>> operator*(const PowerSeries<A> &a, const PowerSeries<B> &b)
{
    using R = product_t<A, B>;
    if (a.is_symbolic() && b.is_symbolic())
        throw BothSymbolic("both series factors depend on the unknown");
    const int order = product_order(a, b);
    if (a.empty() || b.empty())
        return PowerSeries<R>(order);
    const int top = std::min(order, a.degree() + b.degree());
    const int low = a.valuation() + b.valuation();
    if (top < low)
        return PowerSeries<R>(order);

    std::vector<R> acc(static_cast<std::size_t>(top - low + 1), R(0));
    for (const auto &[i, ca] : a.terms()) {
        if (i + b.valuation() > top)
            break;
        for (const auto &[j, cb] : b.terms()) {
            if (i + j > top)
                break;
            acc[static_cast<std::size_t>(i + j - low)] += ca * cb;
        }
    }
    typename PowerSeries<R>::term_map t;
    for (std::size_t k = 0; k < acc.size(); ++k)
        if (!is_zero(acc[k]))
            t.emplace(low + static_cast<int>(k), std::move(acc[k]));
    return PowerSeries<R>(std::move(t), order);
}

// a^k by binary powering; a^0 is the exact constant 1.
template <class S>
PowerSeries<S> pow(const PowerSeries<S> &a, unsigned k)
{
    PowerSeries<S> result = PowerSeries<S>::one();
    PowerSeries<S> base = a;
    while (k > 0) {
        if (k & 1u)
            result = result * base;
        k >>= 1;
        if (k > 0)
            base = base * base;
    }
    return result;
}

// outer(inner(x)). The inner series must vanish at 0. For a unit-valuation
// inner series the result is known through min(N_outer, N_inner).
template <class A, class B>
PowerSeries<product_t<A, B>> compose(const PowerSeries<A> &outer, const PowerSeries<B> &inner)
{
    using R = product_t<A, B>;
    if (inner.order() < 0)
        throw NonzeroConstantTerm("inner series is unknown at x^0");
    if (!is_zero(inner.coefficient(0)))
        throw NonzeroConstantTerm("inner series has constant term " +
                                  std::string(inner.coefficient(0).str()));
    const int v_inner = inner.valuation();
    int order;
    if (v_inner >= kExactOrder) {
        // inner is exactly zero: outer(0)
        order = kExactOrder;
    } else if (v_inner == 1) {
        order = std::min(outer.order(), inner.order());
    } else {
        long stretched = static_cast<long>(v_inner) * (outer.order() + 1L) - 1L;
        order = std::min<long>({stretched, inner.order(), kExactOrder});
    }

    PowerSeries<R> result(order);
    if (v_inner >= kExactOrder) {
        if (outer.order() < 0)
            throw BeyondTruncation("outer series unknown at x^0");
        return PowerSeries<R>::monomial(R(outer.coefficient(0)), 0);
    }

    auto power = PowerSeries<B>::one().truncated(order);
    int k = 0;
    for (const auto &[n, c] : outer.terms()) {
        if (static_cast<long>(n) * v_inner > order)
            break;
        while (k < n) {
            power = (power * inner).truncated(order);
            ++k;
        }
        result += (c * power).truncated(order);
    }
    return result.truncated(order);
}

// 1/a for a series with a(0) != 0, known through a's order.
template <class S>
PowerSeries<S> reciprocal(const PowerSeries<S> &a)
{
    if (a.order() < 0 || is_zero(a.coefficient(0)))
        throw ZeroLeadingCoefficient("reciprocal needs a nonzero constant term");
    if (a.is_exact() && a.degree() > 0)
        throw DomainError("reciprocal of a nonconstant polynomial needs a truncation order");
    const int order = a.order();
    const S a0 = a.coefficient(0);
    typename PowerSeries<S>::term_map t;
    std::vector<S> w;
    w.reserve(static_cast<std::size_t>(order + 1));
    w.push_back(S(1) / a0);
    for (int n = 1; n <= order; ++n) {
        S sum(0);
        for (const auto &[i, ci] : a.terms()) {
            if (i == 0)
                continue;
            if (i > n)
                break;
            sum += ci * w[static_cast<std::size_t>(n - i)];
        }
        w.push_back(-(sum / a0));
    }
    for (int n = 0; n <= order; ++n)
        if (!is_zero(w[static_cast<std::size_t>(n)]))
            t.emplace(n, std::move(w[static_cast<std::size_t>(n)]));
    return PowerSeries<S>(std::move(t), order);
}

using RationalSeries = PowerSeries<Rational>;
using SymbolicSeries = PowerSeries<LinearForm>;

} // namespace abelkit
