#include "abelkit/ej_solver.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "abelkit/error.hpp"

namespace abelkit {

int ej_working_order(int tau, int K)
{
    // highest coefficient read is at tau*(K-1)+1; keep one grid step of margin
    return tau * (K + 1) + 2;
}

EJResult julia_series(const BaseFunction &fn, int K, const EJStepObserver &observer)
{
    if (K < 4)
        throw TruncationTooSmall("EJ needs K >= 4, got " + std::to_string(K));
    const int tau = fn.tau;
    const Rational &gamma = fn.gamma;
    if (taylor_coefficient(fn, 1) != gamma || gamma.sign() >= 0)
        throw DomainError(fn.name + ": leading correction must equal gamma < 0");

    const int N = ej_working_order(tau, K);
    RationalSeries::term_map phi_terms{{1, Rational(1)}};
    for (int m = 1; m * tau + 1 <= N; ++m)
        phi_terms.emplace(m * tau + 1, taylor_coefficient(fn, m));
    const RationalSeries phi(std::move(phi_terms), N);
    const RationalSeries psi = phi.derivative();
    const RationalSeries phi_tau = pow(phi, static_cast<unsigned>(tau)).truncated(N);

    auto eps = [tau](int j, int k) { return tau * (j + k - 1) + 1; };
    const LinearForm u = LinearForm::unknown();

    // running power phi^eps(-1,k)
    RationalSeries phi_lower = pow(phi, static_cast<unsigned>(tau + 1)).truncated(N);
    SymbolicSeries L = (gamma * phi_lower).convert<LinearForm>();
    SymbolicSeries R = SymbolicSeries::monomial(LinearForm(gamma), tau + 1, N);

    std::vector<LinearForm> v(static_cast<std::size_t>(K), LinearForm());
    v[1] = u;
    for (int k = 3; k <= K - 1; ++k) {
        const RationalSeries phi_upper = (phi_lower * phi_tau).truncated(N);
        const LinearForm retire = v[static_cast<std::size_t>(k - 2)] - u;

        L += (retire * phi_lower + u * phi_upper).truncated(N);
        R += SymbolicSeries::monomial(retire, eps(-1, k), N) + SymbolicSeries::monomial(u, eps(0, k), N);

        const LinearForm extracted = (L - (psi * R).truncated(N)).coefficient(eps(1, k));
        if (observer)
            observer(k, extracted);
        if (!extracted.is_symbolic())
            throw DegenerateSolve(fn.name + ": step k=" + std::to_string(k) + " extracted " +
                                  extracted.str() + " without the unknown");
        v[static_cast<std::size_t>(k - 1)] = LinearForm(solve_linear(extracted));
        phi_lower = phi_upper;
    }

    EJResult r;
    r.function = fn.name;
    r.K = K;
    r.tau = tau;
    r.gamma = gamma;
    RationalSeries::term_map lam{{tau + 1, gamma}};
    for (int m = 2; m <= K - 2; ++m) {
        const Rational &vm = v[static_cast<std::size_t>(m)].constant();
        r.v.push_back(vm);
        lam.emplace(tau * m + 1, vm);
    }
    r.lambda = RationalSeries(std::move(lam), tau * (K - 1));
    r.abel_derivative = laurent_reciprocal(r.lambda, tau + 1);
    r.abel = integrate_with_log(r.abel_derivative, tau);
    return r;
}

std::shared_ptr<const EJResult> julia_series_cached(const BaseFunction &fn, int K)
{
    static std::mutex mu;
    static std::map<std::pair<std::string, int>, std::shared_ptr<const EJResult>> memo;
    const auto key = std::make_pair(fn.name, K);
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
    }
    auto result = std::make_shared<const EJResult>(julia_series(fn, K));
    std::lock_guard lock(mu);
    memo[key] = result;
    return result;
}

AbelForm abel_series(const BaseFunction &fn, int K)
{
    return julia_series_cached(fn, K)->abel;
}

AbelForm published_abel_series(const BaseFunction &fn, int K)
{
    AbelForm g = abel_series(fn, K);
    return fn.presentation_sign < 0 ? g.negated() : g;
}

} // namespace abelkit
