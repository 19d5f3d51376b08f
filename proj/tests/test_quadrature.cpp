#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "scmap/quadrature.hpp"

using scmap::integrate_semi_infinite;

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("exponential integral")
{
    const double v = integrate_semi_infinite([](double r) { return std::exp(-r); }, 1.0);
    CHECK(std::abs(v - 1.0) < 1e-11);
}

TEST_CASE("gamma-type integral r^2 exp(-2r)")
{
    // Gamma(3)/2^3 evaluated directly: 2/8 = 0.25.
    const double v = integrate_semi_infinite([](double r) { return r * r * std::exp(-2.0 * r); }, 0.5);
    CHECK(std::abs(v - 0.25) < 1e-11);
}

TEST_CASE("gaussian integral")
{
    const double v = integrate_semi_infinite([](double r) { return std::exp(-r * r); }, 1.0);
    CHECK(std::abs(v - 0.5 * std::sqrt(std::numbers::pi)) < 1e-11);
}

TEST_CASE("linearity on random exponentially damped polynomials")
{
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    std::uniform_real_distribution<double> rate(0.5, 3.0);
    for (int trial = 0; trial < 25; ++trial) {
        const double c0 = coeff(rng), c1 = coeff(rng), c2 = coeff(rng);
        const double d0 = coeff(rng), d1 = coeff(rng), d2 = coeff(rng);
        const double ka = rate(rng), kb = rate(rng);
        const double alpha = coeff(rng), beta = coeff(rng);
        auto f = [&](double r) { return (c0 + c1 * r + c2 * r * r) * std::exp(-ka * r); };
        auto g = [&](double r) { return (d0 + d1 * r + d2 * r * r) * std::exp(-kb * r); };
        auto combined = [&](double r) { return alpha * f(r) + beta * g(r); };

        const double lhs = integrate_semi_infinite(combined, 1.0);
        const double rhs = alpha * integrate_semi_infinite(f, 1.0) + beta * integrate_semi_infinite(g, 1.0);
        CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max({1.0, std::abs(lhs), std::abs(rhs)}));
    }
}

TEST_CASE("non-integrable tail raises a convergence error carrying the best estimate")
{
    try {
        (void)integrate_semi_infinite([](double r) { return 1.0 / (1.0 + r); }, 1.0);
        FAIL("expected convergence_error");
    } catch (const scmap::convergence_error& e) {
        CHECK(e.best_estimate() > 1.0); // partial sums of a log-divergent tail
        CHECK(e.refinement_steps() > 0);
    }
}

TEST_CASE("invalid decay scale is rejected")
{
    CHECK_THROWS_AS((void)integrate_semi_infinite([](double r) { return std::exp(-r); }, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)integrate_semi_infinite([](double r) { return std::exp(-r); }, -1.0), std::invalid_argument);
}

TEST_SUITE_END();
