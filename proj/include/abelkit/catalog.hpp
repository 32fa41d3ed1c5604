#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abelkit/bigfloat.hpp"
#include "abelkit/rational.hpp"

namespace abelkit {

// coefficient * ln(argument), with argument > 0.
struct LogMultiple {
    Rational coefficient;
    Rational argument{1};

    // Unique representative: argument >= 1, and (0, 1) for the zero value.
    LogMultiple canonical() const;
    bool is_zero() const;
    BigFloat evaluate(Precision p) const;
    std::string str() const;

    friend bool operator==(const LogMultiple &a, const LogMultiple &b);
};

// A map theta(x) = x + sum_{m>=1} c_m x^(m*tau+1) with c_1 = gamma < 0,
// attracting 0 from the positive side.
struct BaseFunction {
    std::string name;    // kebab-case identifier
    std::string formula; // human-readable theta(x)
    int tau = 1;
    Rational gamma;
    std::function<Rational(int)> taylor; // m -> c_m, m >= 1

    // Evaluators work at the precision of their argument.
    std::function<BigFloat(const BigFloat &)> forward;
    // Preimage on (0, branch_end]; valid for 0 < y <= image_end.
    std::function<BigFloat(const BigFloat &)> inverse;

    // basin = (0, basin_end); the orbit of every basin point decreases to 0.
    std::function<BigFloat(Precision)> basin_end;
    // theta is increasing on (0, branch_end]
    std::function<BigFloat(Precision)> branch_end;
    // sup of theta over the basin
    std::function<BigFloat(Precision)> image_end;

    // +1 when the printed Abel series is G itself, -1 when it is -G, where
    // G(theta(x)) = G(x) + 1 is the internal convention.
    int presentation_sign = 1;
    std::optional<LogMultiple> delta_conjecture;
    std::optional<std::string> kindred_partner;
};

using BaseFunctionPtr = std::shared_ptr<const BaseFunction>;

Rational taylor_coefficient(const BaseFunction &fn, int m);

// theta(x) at precision p; throws OutOfBasin unless 0 <= x < basin_end.
BigFloat eval_forward(const BaseFunction &fn, const BigFloat &x, Precision p);
BigFloat eval_forward(const BaseFunction &fn, const BigFloat &x);

// The preimage on the increasing branch; throws OutOfRange unless 0 < y <= image_end.
BigFloat eval_inverse(const BaseFunction &fn, const BigFloat &y, Precision p);
BigFloat eval_inverse(const BaseFunction &fn, const BigFloat &y);

bool in_basin(const BaseFunction &fn, const BigFloat &x);

namespace catalog {

// Named entries in listing order.
const std::vector<BaseFunctionPtr> &entries();
std::vector<std::string> names();

// Throws UnknownFunction. "pow-p" requires a parameter; use power_family.
BaseFunctionPtr lookup(std::string_view name);

// theta(x) = x / (1+x)^p for rational p > 0.
BaseFunctionPtr power_family(const Rational &p);

// lookup() that also understands "pow-p" with an explicit p.
BaseFunctionPtr resolve(std::string_view name, const std::optional<Rational> &p);

} // namespace catalog

} // namespace abelkit
