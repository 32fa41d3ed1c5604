#include "abelkit/root_find.hpp"

#include <algorithm>

#include "abelkit/error.hpp"

namespace abelkit {

BigFloat solve_increasing(const RealFunction &f, const RealFunction &df, BigFloat lo, BigFloat hi,
                          BigFloat seed, int max_iterations)
{
    const Precision p = seed.precision();
    lo = BigFloat(lo, p);
    hi = BigFloat(hi, p);
    BigFloat x = (seed > lo && seed < hi) ? seed : (lo + hi) / 2;
    // relative step size at which Newton has converged
    const BigFloat tiny = pow(BigFloat(2L, p), -(p.bits - 6));

    const long limit = std::max<long>(max_iterations, 2 * p.bits + 64);
    int small_steps = 0;
    for (long it = 0; it < limit; ++it) {
        BigFloat fx = f(x);
        if (fx.is_zero())
            return x;
        if (fx.sign() < 0)
            lo = x;
        else
            hi = x;

        BigFloat d = df(x);
        BigFloat next(p);
        bool newton_ok = d.is_finite() && !d.is_zero();
        if (newton_ok) {
            next = x - fx / d;
            newton_ok = next > lo && next < hi;
        }
        if (!newton_ok)
            next = (lo + hi) / 2;

        BigFloat step = abs(next - x);
        x = next;
        if (step <= tiny * abs(x)) {
            // one extra step after convergence is detected
            if (++small_steps >= 2)
                return x;
        }
        if (hi - lo <= tiny * abs(x))
            return x;
    }
    throw PrecisionUnreachable("root finder did not converge at " + std::to_string(p.bits) + " bits");
}

} // namespace abelkit
