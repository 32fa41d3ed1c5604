#include <doctest.h>

#include <map>
#include <thread>

#include "abelkit/ej_solver.hpp"
#include "abelkit/error.hpp"
#include "oracles.hpp"

using namespace abelkit;

namespace {

std::map<int, LinearForm> extractions(const char *name, int K)
{
    std::map<int, LinearForm> seen;
    julia_series(*catalog::lookup(name), K, [&](int k, const LinearForm &f) { seen.emplace(k, f); });
    return seen;
}

std::vector<BaseFunctionPtr> all_entries()
{
    auto v = catalog::entries();
    for (const auto &p : {Rational(1, 2), Rational(2), Rational(3), Rational(5, 2)})
        v.push_back(catalog::power_family(p));
    return v;
}

} // namespace

TEST_CASE("solve_linear")
{
    CHECK(solve_linear(LinearForm(Rational(-1, 2), Rational(-1))) == Rational(-1, 2));
    CHECK(solve_linear(LinearForm(Rational(-5, 6), Rational(-2))) == Rational(-5, 12));
    CHECK(solve_linear(LinearForm(Rational(1, 2), Rational(-1))) == Rational(1, 2));
    CHECK_THROWS_AS(solve_linear(LinearForm(Rational(3))), DegenerateSolve);
}

TEST_CASE("first EJ steps")
{
    const auto six = extractions("xexp-neg", 8);
    CHECK(six.at(3) == LinearForm(Rational(-1, 2), Rational(-1)));
    CHECK(six.at(4) == LinearForm(Rational(-5, 6), Rational(-2)));
    const auto seven = extractions("lambert-w", 8);
    CHECK(seven.at(3) == LinearForm(Rational(1, 2), Rational(-1)));
    CHECK(seven.at(4) == LinearForm(Rational(-5, 6), Rational(-2)));

    const EJResult r6 = julia_series(*catalog::lookup("xexp-neg"), 8);
    CHECK(r6.v_at(2) == Rational(-1, 2));
    CHECK(r6.v_at(3) == Rational(-5, 12));
    CHECK(julia_series(*catalog::lookup("lambert-w"), 8).v_at(2) == Rational(1, 2));
}

TEST_CASE("printed lambda coefficients")
{
    const EJResult r9 = julia_series(*catalog::lookup("arcsinh"), 8);
    CHECK(r9.lambda.coefficient(3) == Rational(-1, 6));
    CHECK(r9.lambda.coefficient(5) == Rational(1, 30));
    CHECK(r9.lambda.coefficient(7) == Rational(-41, 3780));

    const EJResult r8 = julia_series(*catalog::lookup("x-over-1px2"), 16);
    CHECK(r8.lambda.coefficient(25) == Rational(171569, 9240));
    CHECK(r8.lambda.coefficient(3) == Rational(-1));
}

TEST_CASE("lambda layout")
{
    for (const auto &fn : all_entries()) {
        CAPTURE(fn->name);
        const int K = 10;
        const EJResult r = julia_series(*fn, K);
        CHECK(r.K == K);
        CHECK(r.v.size() == static_cast<std::size_t>(K - 3));
        CHECK(r.lambda.valuation() == fn->tau + 1);
        CHECK(r.lambda.coefficient(fn->tau + 1) == fn->gamma);
        for (const auto &[e, c] : r.lambda.terms())
            CHECK((e - 1) % fn->tau == 0);
        for (int m = 2; m <= K - 2; ++m)
            CHECK(r.lambda.coefficient(fn->tau * m + 1) == r.v_at(m));
    }
}

TEST_CASE("Abel series examples")
{
    const AbelForm g6 = abel_series(*catalog::lookup("xexp-neg"), 10);
    CHECK(g6.pole == Rational(1));
    CHECK(g6.log == Rational(1, 2));
    CHECK(g6.taylor_coefficient(1) == Rational(1, 6));
    CHECK(g6.taylor_coefficient(2) == Rational(1, 16));
    CHECK(g6.taylor_coefficient(3) == Rational(19, 540));
    CHECK(g6.taylor_coefficient(4) == Rational(1, 48));
    CHECK(g6.taylor_coefficient(5) == Rational(41, 4200));

    const AbelForm g8 = abel_series(*catalog::lookup("x-over-1px2"), 10);
    CHECK(g8.tau == 2);
    CHECK(g8.pole == Rational(1, 2));
    CHECK(g8.log == Rational(1, 2));
    CHECK(g8.taylor.coefficient(2) == Rational(1, 8));
    CHECK(g8.taylor.coefficient(4) == Rational(5, 96));
    CHECK(g8.taylor.coefficient(6) == Rational(7, 288));
    CHECK(g8.taylor.coefficient(3) == Rational(0));

    const AbelForm g1 = abel_series(*catalog::lookup("logistic"), 10);
    CHECK(g1.pole == Rational(1));
    CHECK(g1.log == Rational(1));
    CHECK(g1.taylor_coefficient(1) == Rational(1, 2));
    CHECK(g1.taylor_coefficient(2) == Rational(1, 3));
    CHECK(g1.taylor_coefficient(3) == Rational(13, 36));
    CHECK(g1.taylor_coefficient(4) == Rational(113, 240));

    const auto w = catalog::lookup("lambert-w");
    CHECK(published_abel_series(*w, 10).pole == -abel_series(*w, 10).pole);
    CHECK(published_abel_series(*w, 10).taylor == -abel_series(*w, 10).taylor);
    CHECK(published_abel_series(*catalog::lookup("sin"), 10).pole == Rational(3));
}

TEST_CASE("truncation bounds")
{
    CHECK_THROWS_AS(julia_series(*catalog::lookup("xexp-neg"), 3), TruncationTooSmall);
    CHECK_NOTHROW(julia_series(*catalog::lookup("xexp-neg"), 4));
    CHECK(julia_series(*catalog::lookup("xexp-neg"), 4).v.size() == 1);
}

TEST_CASE("Julia identity holds through x^(tau K)")
{
    for (const auto &fn : all_entries()) {
        CAPTURE(fn->name);
        const int K = 16;
        const EJResult r = julia_series(*fn, K);
        const RationalSeries res = oracle::julia_residual(*fn, r.lambda, fn->tau * K + 1);
        for (int e = 0; e <= fn->tau * K; ++e) {
            CAPTURE(e);
            CHECK(res.coefficient(e).is_zero());
        }
    }
}

TEST_CASE("coefficient matching oracle reproduces v")
{
    for (const auto &fn : all_entries()) {
        CAPTURE(fn->name);
        const int K = 18;
        const std::vector<Rational> expected = oracle::matched_coefficients(*fn, K);
        CHECK(julia_series(*fn, K).v == expected);
    }
}

TEST_CASE("stability in K")
{
    for (const auto &fn : all_entries()) {
        CAPTURE(fn->name);
        const EJResult a = julia_series(*fn, 14);
        const EJResult b = julia_series(*fn, 18);
        for (int m = 2; m <= 12; ++m)
            CHECK(a.v_at(m) == b.v_at(m));
    }
}

TEST_CASE("pole coefficient is -1/(gamma tau)")
{
    for (const auto &fn : all_entries()) {
        CAPTURE(fn->name);
        CHECK(abel_series(*fn, 8).pole == -(fn->gamma * Rational(fn->tau)).inverse());
    }
    CHECK(abel_series(*catalog::lookup("xexp-neg"), 8).pole == Rational(1));
    CHECK(abel_series(*catalog::lookup("sin"), 8).pole == Rational(3));
    CHECK(abel_series(*catalog::lookup("x-over-1px2"), 8).pole == Rational(1, 2));
    CHECK(abel_series(*catalog::lookup("arcsinh"), 8).pole == Rational(3));
    CHECK(abel_series(*catalog::lookup("tanh"), 8).pole == Rational(3, 2));
}

TEST_CASE("kindred mirrors")
{
    // partner(x) = -theta^-1(-x), so lambda_partner(x) = lambda(-x)
    for (const auto &[a, b] : {std::pair{"xexp-neg", "lambert-w"}, std::pair{"log1p", "one-minus-exp-neg"}}) {
        CAPTURE(a);
        const EJResult ra = julia_series(*catalog::lookup(a), 20);
        const EJResult rb = julia_series(*catalog::lookup(b), 20);
        REQUIRE(ra.lambda.order() == rb.lambda.order());
        for (int e = 0; e <= ra.lambda.order(); ++e)
            CHECK(rb.lambda.coefficient(e) == (e % 2 == 0 ? ra.lambda.coefficient(e) : -ra.lambda.coefficient(e)));
    }
}

TEST_CASE("memo table")
{
    const auto fn = catalog::lookup("tanh");
    auto first = julia_series_cached(*fn, 12);
    CHECK(first == julia_series_cached(*fn, 12));
    CHECK(first->v == julia_series(*fn, 12).v);

    std::vector<std::shared_ptr<const EJResult>> got(8);
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < got.size(); ++i)
        pool.emplace_back([&, i] { got[i] = julia_series_cached(*catalog::lookup("arctan"), 22); });
    for (auto &t : pool)
        t.join();
    for (const auto &g : got)
        CHECK(g->v == got.front()->v);
}
