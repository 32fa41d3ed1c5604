#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "abelkit/abel_form.hpp"
#include "abelkit/catalog.hpp"
#include "abelkit/linear_form.hpp"
#include "abelkit/power_series.hpp"

namespace abelkit {

// Output of one Ecalle-Jagy run at truncation K.
struct EJResult {
    std::string function;
    int K = 0;
    int tau = 1;
    Rational gamma;

    // gamma x^(tau+1) + sum_{m=2}^{K-2} v_m x^(tau m + 1), known through x^(tau (K-1)).
    RationalSeries lambda;
    // v_2 ... v_{K-2}
    std::vector<Rational> v;
    // 1/lambda
    LaurentSeries abel_derivative;
    // Antiderivative of 1/lambda with zero integration constant; satisfies
    // G(theta(x)) = G(x) + 1 asymptotically.
    AbelForm abel;

    const Rational &v_at(int m) const { return v.at(static_cast<std::size_t>(m - 2)); }
};

// Called once per loop turn k with [x^(tau k + 1)]{L - psi R} before it is solved.
using EJStepObserver = std::function<void(int k, const LinearForm &extracted)>;

// Working truncation order of the series inside the EJ loop.
int ej_working_order(int tau, int K);

// Runs the EJ iteration for k = 3 .. K-1. Throws TruncationTooSmall for K < 4
// and DegenerateSolve if an extracted coefficient does not involve the unknown.
EJResult julia_series(const BaseFunction &fn, int K, const EJStepObserver &observer = {});

// Memoized julia_series keyed by (function name, K); safe to call concurrently.
std::shared_ptr<const EJResult> julia_series_cached(const BaseFunction &fn, int K);

// The EJ-normalized Abel series G for G(theta(x)) = G(x) + 1.
AbelForm abel_series(const BaseFunction &fn, int K);
// The series in the sign convention used for display (-G for W).
AbelForm published_abel_series(const BaseFunction &fn, int K);

} // namespace abelkit
