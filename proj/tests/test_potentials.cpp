#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "scmap/potentials.hpp"

using namespace scmap;

TEST_SUITE_BEGIN("potentials");

TEST_CASE("yukawa evaluation")
{
    CHECK(yukawa_eval(YukawaPotential(1.0, 0.0), 1.0) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(yukawa_eval(YukawaPotential(1.0, 0.01), 1.0) == doctest::Approx(-std::exp(-0.01)).epsilon(1e-14));
    CHECK(yukawa_eval(YukawaPotential(1.0, 0.025), 2.0) == doctest::Approx(-std::exp(-0.05) / 2.0).epsilon(1e-14));
    CHECK_THROWS_AS((void)yukawa_eval(YukawaPotential(1.0, 0.1), 0.0), std::domain_error);
    CHECK_THROWS_AS((void)yukawa_eval(YukawaPotential(1.0, 0.1), -1.0), std::domain_error);
}

TEST_CASE("yukawa parameter validation")
{
    CHECK_THROWS_AS(YukawaPotential(0.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(YukawaPotential(1.0, -0.1), std::invalid_argument);
}

TEST_CASE("truncation coefficients")
{
    SUBCASE("pure Coulomb limit")
    {
        const auto p = truncate_yukawa(1.0, 0.0);
        CHECK(p.A1 == -1.0);
        CHECK(p.A2 == 0.0);
        CHECK(p.A3 == 0.0);
        CHECK(p.A4 == 0.0);
        CHECK(p.A5 == 0.0);
        CHECK(p.A6 == 0.0);
    }
    SUBCASE("delta = 0.01")
    {
        const auto p = truncate_yukawa(1.0, 0.01);
        CHECK(p.A1 == doctest::Approx(-1.0).epsilon(1e-15));
        CHECK(p.A2 == doctest::Approx(1e-2).epsilon(1e-14));
        CHECK(p.A3 == doctest::Approx(-5e-5).epsilon(1e-14));
        CHECK(p.A4 == doctest::Approx(1.0 / 6.0 * 1e-6).epsilon(1e-14));
        CHECK(p.A5 == doctest::Approx(-1.0 / 24.0 * 1e-8).epsilon(1e-14));
        CHECK(p.A6 == doctest::Approx(1.0 / 120.0 * 1e-10).epsilon(1e-14));
    }
    SUBCASE("coupling e2 = 2, delta = 0.1")
    {
        const auto p = truncate_yukawa(2.0, 0.1);
        CHECK(p.A3 == doctest::Approx(-0.01).epsilon(1e-14));
        CHECK(p.A6 == doctest::Approx(2.0 / 120.0 * 1e-5).epsilon(1e-14));
    }
}

TEST_CASE("truncation is homogeneous in the coupling")
{
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> deltas(0.0, 0.03);
    std::uniform_real_distribution<double> scales(0.1, 4.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double d = deltas(rng);
        const double s = scales(rng);
        const auto base = truncate_yukawa(1.0, d);
        const auto scaled = truncate_yukawa(s, d);
        CHECK(scaled.A1 == doctest::Approx(s * base.A1).epsilon(1e-14));
        CHECK(scaled.A2 == doctest::Approx(s * base.A2).epsilon(1e-14));
        CHECK(scaled.A3 == doctest::Approx(s * base.A3).epsilon(1e-14));
        CHECK(scaled.A4 == doctest::Approx(s * base.A4).epsilon(1e-14));
        CHECK(scaled.A5 == doctest::Approx(s * base.A5).epsilon(1e-14));
        CHECK(scaled.A6 == doctest::Approx(s * base.A6).epsilon(1e-14));
    }
}

TEST_CASE("alternating sign pattern for delta > 0")
{
    const auto p = truncate_yukawa(1.0, 0.02);
    CHECK(p.A1 < 0.0);
    CHECK(p.A2 > 0.0);
    CHECK(p.A3 < 0.0);
    CHECK(p.A4 > 0.0);
    CHECK(p.A5 < 0.0);
    CHECK(p.A6 > 0.0);
}

TEST_CASE("power-series evaluation")
{
    CHECK(powerseries_eval({-1.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 2.0) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(powerseries_eval({0.0, 1.0, 1.0, 1.0, 1.0, 1.0}, 1.0) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK_THROWS_AS((void)powerseries_eval({1, 1, 1, 1, 1, 1}, 0.0), std::domain_error);
}

TEST_CASE("truncation agrees with the exact form at low screening")
{
    const YukawaPotential yk(1.0, 0.025);
    const auto series = truncate_yukawa(yk);
    const double exact = yukawa_eval(yk, 1.0);
    const double approx = powerseries_eval(series, 1.0);
    CHECK(std::abs(approx - exact) < 1.1e-10);
}

TEST_CASE("truncation remainder is bounded by the first omitted term")
{
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> deltas(1e-4, 0.025);
    std::uniform_real_distribution<double> radii(0.1, 10.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double d = deltas(rng);
        const double r = radii(rng);
        const YukawaPotential yk(1.0, d);
        const double exact = yukawa_eval(yk, r);
        const double diff = std::abs(powerseries_eval(truncate_yukawa(yk), r) - exact);
        const double bound = std::pow(d, 5) * std::pow(r, 4) / 120.0 * (d * r);
        const double fp_noise = 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(exact));
        CHECK(diff <= bound + fp_noise);
    }
}

TEST_CASE("oscillator evaluation")
{
    CHECK(oscillator_eval({1.0, 0.0, 0.0, 0.0, 0.0}, 3.0) == doctest::Approx(9.0).epsilon(1e-15));
    CHECK(oscillator_eval({1.0, 1.0, 1.0, 1.0, 1.0}, 1.0) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(oscillator_eval({2.0, 0.0, 0.0, 0.0, 0.5}, 2.0) == doctest::Approx(520.0).epsilon(1e-15));
    CHECK(oscillator_eval({1.0, 1.0, 1.0, 1.0, 1.0}, 0.0) == 0.0);
    CHECK_THROWS_AS((void)oscillator_eval({1, 0, 0, 0, 0}, -0.5), std::domain_error);
}

TEST_CASE("single-term exactness")
{
    // Each power-series term alone evaluates exactly at r = 2.
    CHECK(powerseries_eval({0, 0, 1, 0, 0, 0}, 2.0) == 2.0);
    CHECK(powerseries_eval({0, 0, 0, 1, 0, 0}, 2.0) == 4.0);
    CHECK(powerseries_eval({0, 0, 0, 0, 1, 0}, 2.0) == 8.0);
    CHECK(powerseries_eval({0, 0, 0, 0, 0, 1}, 2.0) == 16.0);
    CHECK(oscillator_eval({0, 1, 0, 0, 0}, 2.0) == 16.0);
    CHECK(oscillator_eval({0, 0, 1, 0, 0}, 2.0) == 64.0);
    CHECK(oscillator_eval({0, 0, 0, 1, 0}, 2.0) == 256.0);
    CHECK(oscillator_eval({0, 0, 0, 0, 1}, 2.0) == 1024.0);
}

TEST_SUITE_END();
