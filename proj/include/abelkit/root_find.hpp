#pragma once

#include <functional>

#include "abelkit/bigfloat.hpp"

namespace abelkit {

using RealFunction = std::function<BigFloat(const BigFloat &)>;

// Root of an increasing function f on [lo, hi] with f(lo) <= 0 <= f(hi).
// Newton steps from `seed`, falling back to bisection whenever a step leaves
// the current bracket. Converges to the precision of `seed`.
BigFloat solve_increasing(const RealFunction &f, const RealFunction &df, BigFloat lo, BigFloat hi,
                          BigFloat seed, int max_iterations = 400);

} // namespace abelkit
