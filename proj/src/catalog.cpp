#include "abelkit/catalog.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "abelkit/error.hpp"
#include "abelkit/power_series.hpp"
#include "abelkit/root_find.hpp"

namespace abelkit {

// ---------------------------------------------------------------- LogMultiple

LogMultiple LogMultiple::canonical() const
{
    if (argument.sign() <= 0)
        throw DomainError("logarithm of non-positive " + argument.str());
    if (coefficient.is_zero() || argument == Rational(1))
        return LogMultiple{Rational(0), Rational(1)};
    LogMultiple c = *this;
    if (c.argument < Rational(1)) {
        c.argument = c.argument.inverse();
        c.coefficient = -c.coefficient;
    }
    // ln((a/b)) with a = r^k, b = s^k  ->  k ln(r/s)
    mpz_class num = c.argument.numerator(), den = c.argument.denominator();
    for (unsigned long k = 64; k >= 2; --k) {
        mpz_class rn, rd;
        bool exact_num = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k) != 0;
        bool exact_den = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k) != 0;
        if (exact_num && exact_den && !(rn == num && rd == den)) {
            c.argument = Rational(rn, rd);
            c.coefficient *= Rational(static_cast<long>(k));
            break;
        }
    }
    return c;
}

bool LogMultiple::is_zero() const
{
    return canonical().coefficient.is_zero();
}

BigFloat LogMultiple::evaluate(Precision p) const
{
    return BigFloat(coefficient, p) * log(BigFloat(argument, p));
}

std::string LogMultiple::str() const
{
    LogMultiple c = canonical();
    if (c.coefficient.is_zero())
        return "0";
    return c.coefficient.str() + "*ln(" + c.argument.str() + ")";
}

bool operator==(const LogMultiple &a, const LogMultiple &b)
{
    LogMultiple ca = a.canonical(), cb = b.canonical();
    return ca.coefficient == cb.coefficient && ca.argument == cb.argument;
}

// -------------------------------------------------------------- evaluators

Rational taylor_coefficient(const BaseFunction &fn, int m)
{
    if (m < 1)
        throw DomainError("taylor coefficient index must be >= 1");
    return fn.taylor(m);
}

namespace {

// evaluators run with a few extra bits and round once at the end
Precision guarded(Precision p) { return Precision{p.bits + 24}; }

} // namespace

bool in_basin(const BaseFunction &fn, const BigFloat &x)
{
    return x.sign() > 0 && x < fn.basin_end(x.precision());
}

BigFloat eval_forward(const BaseFunction &fn, const BigFloat &x, Precision p)
{
    return eval_forward(fn, BigFloat(x, p));
}

BigFloat eval_forward(const BaseFunction &fn, const BigFloat &x)
{
    if (x.is_zero())
        return x;
    if (!in_basin(fn, x))
        throw OutOfBasin(fn.name + ": " + x.to_sci(10) + " is outside the basin");
    return BigFloat(fn.forward(BigFloat(x, guarded(x.precision()))), x.precision());
}

BigFloat eval_inverse(const BaseFunction &fn, const BigFloat &y, Precision p)
{
    return eval_inverse(fn, BigFloat(y, p));
}

BigFloat eval_inverse(const BaseFunction &fn, const BigFloat &y)
{
    const Precision p = y.precision();
    const BigFloat top = fn.image_end(guarded(p));
    if (y.sign() <= 0 || (y > top && y - top > abs(top) * pow(BigFloat(2L, p), 8 - p.bits)))
        throw OutOfRange(fn.name + ": " + y.to_sci(10) + " has no preimage in the basin");
    // a y rounded just past the peak maps to the branch end
    return BigFloat(fn.inverse(min(BigFloat(y, guarded(p)), top)), p);
}

namespace catalog {

namespace {

using Bound = std::function<BigFloat(Precision)>;

Bound unbounded()
{
    return [](Precision p) { return BigFloat::infinity(p); };
}

Bound constant(Rational r)
{
    return [r](Precision p) { return BigFloat(r, p); };
}

Bound pi_times(Rational r)
{
    return [r](Precision p) { return BigFloat::pi(p) * BigFloat(r, p); };
}

BigFloat half(const BigFloat &x) { return x / 2L; }

// Lambert W on (0, inf): Newton on w + ln w = ln x from a double seed.
BigFloat lambert_w(const BigFloat &x)
{
    const Precision p = x.precision();
    double xd = x.to_double();
    double w = xd < 1.0 ? xd / (1.0 + xd) : std::log1p(xd);
    for (int i = 0; i < 60; ++i) {
        double ew = std::exp(w);
        double f = w * ew - xd;
        double step = f / (ew * (w + 1) - (w + 2) * f / (2 * w + 2));
        w -= step;
        if (std::fabs(step) <= 1e-16 * std::fabs(w))
            break;
    }
    const BigFloat log_x = log(x);
    RealFunction f = [&](const BigFloat &v) { return v + log(v) - log_x; };
    RealFunction df = [](const BigFloat &v) { return 1L + 1L / v; };
    BigFloat lo = x * exp(-x);
    BigFloat hi = x;
    BigFloat seed(w, p);
    if (!(seed > lo && seed < hi))
        seed = half(lo + hi);
    return solve_increasing(f, df, lo, hi, seed);
}

// Preimage of y under x/(1+x)^p on the increasing branch (0, peak].
BigFloat power_family_inverse(const Rational &power, const BigFloat &y)
{
    const Precision prec = y.precision();
    const BigFloat p(power, prec);
    if (power == Rational(1))
        return y / (1L - y);
    const BigFloat log_y = log(y);
    RealFunction f = [&](const BigFloat &z) { return log(z) - p * log1p(z) - log_y; };
    RealFunction df = [&](const BigFloat &z) { return 1L / z - p / (1L + z); };
    BigFloat lo = y;
    BigFloat hi(prec);
    if (power > Rational(1)) {
        hi = BigFloat((power - Rational(1)).inverse(), prec);
    } else {
        hi = max(BigFloat(2L, prec) * y, BigFloat(1L, prec));
        for (int i = 0; i < 4000 && f(hi).sign() < 0; ++i)
            hi *= 2L;
    }
    return solve_increasing(f, df, lo, hi, half(lo + hi));
}

RationalSeries tanh_series(int odd_order)
{
    RationalSeries::term_map s, c;
    for (int n = 0; n <= odd_order; ++n) {
        if (n % 2 == 1)
            s.emplace(n, factorial(static_cast<unsigned>(n)).inverse());
        else
            c.emplace(n, factorial(static_cast<unsigned>(n)).inverse());
    }
    RationalSeries sinh_s(std::move(s), odd_order), cosh_s(std::move(c), odd_order);
    return sinh_s * reciprocal(cosh_s);
}

Rational tanh_coefficient(int m)
{
    static std::mutex mu;
    static RationalSeries cache(-1);
    std::lock_guard lock(mu);
    if (cache.order() < 2 * m + 1)
        cache = tanh_series(std::max(2 * m + 1, 2 * cache.order() + 1) + 40);
    return cache.coefficient(2 * m + 1);
}

Rational sign_of(int m) { return Rational(m % 2 == 0 ? 1 : -1); }

std::vector<BaseFunctionPtr> build()
{
    std::vector<BaseFunctionPtr> all;
    auto add = [&](BaseFunction f) { all.push_back(std::make_shared<const BaseFunction>(std::move(f))); };

    add(BaseFunction{
        .name = "logistic",
        .formula = "x*(1-x)",
        .tau = 1,
        .gamma = Rational(-1),
        .taylor = [](int m) { return m == 1 ? Rational(-1) : Rational(0); },
        .forward = [](const BigFloat &x) { return x * (1L - x); },
        // 2y / (1 + sqrt(1 - 4y)) avoids cancellation for small y
        .inverse = [](const BigFloat &y) { return (2L * y) / (1L + sqrt(1L - 4L * y)); },
        .basin_end = constant(Rational(1)),
        .branch_end = constant(Rational(1, 2)),
        .image_end = constant(Rational(1, 4)),
        .delta_conjecture = LogMultiple{Rational(0), Rational(1)},
    });
    add(BaseFunction{
        .name = "sin",
        .formula = "sin(x)",
        .tau = 2,
        .gamma = Rational(-1, 6),
        .taylor = [](int m) { return sign_of(m) / factorial(static_cast<unsigned>(2 * m + 1)); },
        .forward = [](const BigFloat &x) { return sin(x); },
        .inverse = [](const BigFloat &y) { return asin(y); },
        .basin_end = pi_times(Rational(1)),
        .branch_end = pi_times(Rational(1, 2)),
        .image_end = constant(Rational(1)),
        .delta_conjecture = LogMultiple{Rational(3, 5), Rational(3)},
        .kindred_partner = "arcsinh",
    });
    add(BaseFunction{
        .name = "log1p",
        .formula = "ln(1+x)",
        .tau = 1,
        .gamma = Rational(-1, 2),
        .taylor = [](int m) { return sign_of(m) / Rational(m + 1); },
        .forward = [](const BigFloat &x) { return log1p(x); },
        .inverse = [](const BigFloat &y) { return expm1(y); },
        .basin_end = unbounded(),
        .branch_end = unbounded(),
        .image_end = unbounded(),
        .delta_conjecture = LogMultiple{Rational(1, 3), Rational(2)},
        .kindred_partner = "one-minus-exp-neg",
    });
    add(BaseFunction{
        .name = "one-minus-exp-neg",
        .formula = "1-exp(-x)",
        .tau = 1,
        .gamma = Rational(-1, 2),
        .taylor = [](int m) { return sign_of(m) / factorial(static_cast<unsigned>(m + 1)); },
        .forward = [](const BigFloat &x) { return -expm1(-x); },
        .inverse = [](const BigFloat &y) { return -log1p(-y); },
        .basin_end = unbounded(),
        .branch_end = unbounded(),
        .image_end = constant(Rational(1)),
        .kindred_partner = "log1p",
    });
    add(BaseFunction{
        .name = "xexp-neg",
        .formula = "x*exp(-x)",
        .tau = 1,
        .gamma = Rational(-1),
        .taylor = [](int m) { return sign_of(m) / factorial(static_cast<unsigned>(m)); },
        .forward = [](const BigFloat &x) { return x * exp(-x); },
        .inverse =
            [](const BigFloat &y) {
                // z - ln z = -ln y on (0, 1]
                const BigFloat log_y = log(y);
                RealFunction f = [&](const BigFloat &z) { return log(z) - z - log_y; };
                RealFunction df = [](const BigFloat &z) { return 1L / z - 1L; };
                BigFloat lo = y, hi(1L, y.precision());
                double yd = y.to_double(), z = yd;
                for (int i = 0; i < 8; ++i)
                    z = yd * std::exp(z);
                BigFloat seed(z, y.precision());
                return solve_increasing(f, df, lo, hi, seed);
            },
        .basin_end = unbounded(),
        .branch_end = constant(Rational(1)),
        .image_end = [](Precision p) { return exp(BigFloat(-1L, p)); },
        .delta_conjecture = LogMultiple{Rational(0), Rational(1)},
        .kindred_partner = "lambert-w",
    });
    add(BaseFunction{
        .name = "lambert-w",
        .formula = "W(x)",
        .tau = 1,
        .gamma = Rational(-1),
        // [x^(m+1)] W = (-(m+1))^m / (m+1)!
        .taylor = [](int m) { return Rational(-(m + 1)).pow(m) / factorial(static_cast<unsigned>(m + 1)); },
        .forward = lambert_w,
        .inverse = [](const BigFloat &y) { return y * exp(y); },
        .basin_end = unbounded(),
        .branch_end = unbounded(),
        .image_end = unbounded(),
        .presentation_sign = -1,
        .kindred_partner = "xexp-neg",
    });
    add(BaseFunction{
        .name = "x-over-1px2",
        .formula = "x/(1+x^2)",
        .tau = 2,
        .gamma = Rational(-1),
        .taylor = [](int m) { return sign_of(m); },
        .forward = [](const BigFloat &x) { return x / (1L + x * x); },
        .inverse = [](const BigFloat &y) { return (2L * y) / (1L + sqrt(1L - 4L * y * y)); },
        .basin_end = unbounded(),
        .branch_end = constant(Rational(1)),
        .image_end = constant(Rational(1, 2)),
        .delta_conjecture = LogMultiple{Rational(-1, 4), Rational(2)},
    });
    add(BaseFunction{
        .name = "arcsinh",
        .formula = "arcsinh(x)",
        .tau = 2,
        .gamma = Rational(-1, 6),
        .taylor =
            [](int m) {
                auto um = static_cast<unsigned>(m);
                return sign_of(m) * factorial(2 * um) /
                       (Rational(4).pow(m) * factorial(um) * factorial(um) * Rational(2 * m + 1));
            },
        .forward = [](const BigFloat &x) { return asinh(x); },
        .inverse = [](const BigFloat &y) { return sinh(y); },
        .basin_end = unbounded(),
        .branch_end = unbounded(),
        .image_end = unbounded(),
        .delta_conjecture = LogMultiple{Rational(-3, 5), Rational(3)},
        .kindred_partner = "sin",
    });
    add(BaseFunction{
        .name = "tanh",
        .formula = "tanh(x)",
        .tau = 2,
        .gamma = Rational(-1, 3),
        .taylor = tanh_coefficient,
        .forward = [](const BigFloat &x) { return tanh(x); },
        .inverse = [](const BigFloat &y) { return atanh(y); },
        .basin_end = unbounded(),
        .branch_end = unbounded(),
        .image_end = constant(Rational(1)),
        .delta_conjecture = LogMultiple{Rational(3, 20), Rational(3, 2)},
        .kindred_partner = "arctan",
    });
    add(BaseFunction{
        .name = "arctan",
        .formula = "arctan(x)",
        .tau = 2,
        .gamma = Rational(-1, 3),
        .taylor = [](int m) { return sign_of(m) / Rational(2 * m + 1); },
        .forward = [](const BigFloat &x) { return atan(x); },
        .inverse = [](const BigFloat &y) { return tan(y); },
        .basin_end = unbounded(),
        .branch_end = unbounded(),
        .image_end = pi_times(Rational(1, 2)),
        .delta_conjecture = LogMultiple{Rational(-3, 20), Rational(3, 2)},
        .kindred_partner = "tanh",
    });
    add(BaseFunction{
        .name = "x-over-sqrt1px",
        .formula = "x/sqrt(1+x)",
        .tau = 1,
        .gamma = Rational(-1, 2),
        .taylor = [](int m) { return binomial(Rational(-1, 2), static_cast<unsigned>(m)); },
        .forward = [](const BigFloat &x) { return x / sqrt(1L + x); },
        // y^2 (1+x) = x^2
        .inverse = [](const BigFloat &y) { return (y * y + y * sqrt(y * y + 4L)) / 2L; },
        .basin_end = unbounded(),
        .branch_end = unbounded(),
        .image_end = unbounded(),
        .delta_conjecture = LogMultiple{Rational(-1, 2), Rational(2)},
    });
    return all;
}

} // namespace

const std::vector<BaseFunctionPtr> &entries()
{
    static const std::vector<BaseFunctionPtr> table = build();
    return table;
}

std::vector<std::string> names()
{
    std::vector<std::string> out;
    for (const auto &e : entries())
        out.push_back(e->name);
    out.push_back("pow-p");
    return out;
}

BaseFunctionPtr lookup(std::string_view name)
{
    for (const auto &e : entries())
        if (e->name == name)
            return e;
    if (name == "pow-p")
        throw UnknownFunction("pow-p needs an exponent (--p)");
    throw UnknownFunction("no base function named '" + std::string(name) + "'");
}

BaseFunctionPtr power_family(const Rational &p)
{
    if (p.sign() <= 0)
        throw DomainError("pow-p needs p > 0, got " + p.str());
    static std::mutex mu;
    static std::map<Rational, BaseFunctionPtr> made;
    std::lock_guard lock(mu);
    if (auto it = made.find(p); it != made.end())
        return it->second;

    const bool peaked = p > Rational(1);
    auto peak = [p](Precision prec) { return BigFloat((p - Rational(1)).inverse(), prec); };
    auto forward = [p](const BigFloat &x) { return x * exp(-(BigFloat(p, x.precision()) * log1p(x))); };

    BaseFunction f{
        .name = "pow-p[" + p.str() + "]",
        .formula = "x/(1+x)^(" + p.str() + ")",
        .tau = 1,
        .gamma = -p,
        .taylor = [p](int m) { return binomial(-p, static_cast<unsigned>(m)); },
        .forward = forward,
        .inverse = [p](const BigFloat &y) { return power_family_inverse(p, y); },
        .basin_end = unbounded(),
        .branch_end = peaked ? Bound(peak) : unbounded(),
        .image_end = peaked ? Bound([peak, forward](Precision prec) { return forward(peak(prec)); })
                                            : (p == Rational(1) ? constant(Rational(1)) : unbounded()),
        .delta_conjecture = LogMultiple{(Rational(1) - p) / (Rational(2) * p), p},
    };
    auto ptr = std::make_shared<const BaseFunction>(std::move(f));
    made.emplace(p, ptr);
    return ptr;
}

BaseFunctionPtr resolve(std::string_view name, const std::optional<Rational> &p)
{
    if (name == "pow-p") {
        if (!p)
            throw UnknownFunction("pow-p needs an exponent (--p)");
        return power_family(*p);
    }
    return lookup(name);
}

} // namespace catalog

} // namespace abelkit
