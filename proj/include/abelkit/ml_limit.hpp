#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abelkit/abel_form.hpp"
#include "abelkit/bigfloat.hpp"
#include "abelkit/catalog.hpp"

namespace abelkit {

// radicand^(1/index), radicand > 0
struct Surd {
    Rational radicand{1};
    int index = 1;

    BigFloat value(Precision p) const;
    std::string str() const;

    friend bool operator==(const Surd &, const Surd &) = default;
};

// s_n = -prefactor * n^((tau+1)/tau) * (x_n/scale - n^(-1/tau) + log_kappa * ln(n) * n^(-(tau+1)/tau))
struct MLFormula {
    int tau = 1;
    Rational prefactor{1};
    Surd scale;
    Rational log_kappa;
    // log coefficient B of the EJ series the formula was built from
    Rational log_coefficient;

    static MLFormula from_series(const AbelForm &g, const Rational &gamma);
    static MLFormula for_function(const BaseFunction &fn);

    std::string str() const;
};

// One term of the limit sequence from an orbit point x_n.
BigFloat ml_term(const MLFormula &f, const BigFloat &x_n, long n);
// s_n for the orbit of x under fn, at precision p.
BigFloat ml_sequence(const BaseFunction &fn, const BigFloat &x, long n, Precision p);

// The variant for x_n = x_{n-1} + 1/x_{n-1}:
// n^(1/2) (sqrt(2) x_n - 2 n^(1/2) - (1/4) ln(n) / n^(1/2)), tending to g~_8(1/x).
BigFloat ml_sequence_xplusinv(const BigFloat &x, long n, Precision p);

struct MLEstimate {
    BigFloat value;
    BigFloat error_bar;
    long n_max = 0;
    int model_order = 0;
    int samples = 0;
};

// Sample indices used by the extrapolation: a geometric grid with ratio 2^(1/8)
// from n_max/256 (at least 8) to n_max.
std::vector<long> sample_grid(long n_max);

// Least-squares fit of s_n against c + sum_{j=1}^{J} n^(-j) P_j(ln n), deg P_j = j+1,
// returning c with |c_J - c_{J-1}| as the error bar.
MLEstimate extrapolate_limit(const std::vector<std::pair<long, BigFloat>> &samples, int model_order);

MLEstimate ml_value(const BaseFunction &fn, const BigFloat &x, long n_max = 1L << 16, int model_order = 4,
                    int digits = 80);
MLEstimate ml_value_xplusinv(const BigFloat &x, long n_max = 1L << 16, int model_order = 4, int digits = 80);

// -(B/tau) ln(-gamma tau), from the exact EJ data.
LogMultiple delta_hypothesis(const BaseFunction &fn);

struct DeltaReport {
    std::string function;
    BigFloat x;
    BigFloat ej_value;
    MLEstimate ml;
    BigFloat delta_estimate;
    std::optional<LogMultiple> conjectured;
    std::optional<BigFloat> delta_conjectured;
    LogMultiple hypothesis;
    BigFloat delta_hypothesis;
    std::optional<BigFloat> discrepancy_conjectured;
    BigFloat discrepancy_hypothesis;
    long n_max = 0;
};

DeltaReport delta_estimate(const BaseFunction &fn, const BigFloat &x, long n_max = 1L << 16);

} // namespace abelkit
