#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msaw/magnetics.hpp"

#include <cmath>
#include <random>

using namespace msaw;

TEST_CASE("shift vanishes at the reference field")
{
    MagnetoelasticModel m;
    CHECK(fractional_shift(m, m.h_ref_mt) == 0.0);
    // any reference inside the saturated low plateau gives the same zero
    m.h_ref_mt = -2.0;
    CHECK(fractional_shift(m, -4.0) == 0.0);
}

TEST_CASE("full window span gives -687.28 ppm")
{
    // independently: -781 ppm/mT * (0.69 - (-0.19)) mT = -687.28 ppm
    MagnetoelasticModel m;
    CHECK(fractional_shift(m, 0.69) == doctest::Approx(-687.28).epsilon(1e-12));
    // saturation: larger fields add nothing
    CHECK(fractional_shift(m, 5.0) == doctest::Approx(-687.28).epsilon(1e-12));
    CHECK(fractional_shift(m, 100.0) == doctest::Approx(-687.28).epsilon(1e-12));
}

TEST_CASE("response is linear inside the window")
{
    MagnetoelasticModel m;
    for (double h = -0.19; h <= 0.69 + 1e-12; h += 0.11) {
        double expected = -781.0 * (h - (-0.19));
        CHECK(fractional_shift(m, h) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("plateaus are exactly flat with a hard clamp")
{
    MagnetoelasticModel m;
    CHECK(fractional_shift(m, -0.19) == fractional_shift(m, -0.5));
    CHECK(fractional_shift(m, -10.0) == fractional_shift(m, -0.19));
    CHECK(fractional_shift(m, 0.69) == fractional_shift(m, 3.0));
}

TEST_CASE("finite-difference slope inside the window matches exactly")
{
    MagnetoelasticModel m;
    double h = 0.25, dh = 0.01;
    double slope = (fractional_shift(m, h + dh) - fractional_shift(m, h - dh)) / (2.0 * dh);
    CHECK(slope == doctest::Approx(-781.0).epsilon(1e-10));
}

TEST_CASE("response is bounded and Lipschitz")
{
    MagnetoelasticModel m;
    m.smoothing_mt = 0.05;
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> field(-10.0, 10.0);
    double bound = std::abs(m.slope_ppm_per_mt) * (m.h_high_mt - m.h_low_mt);
    for (int i = 0; i < 500; ++i) {
        double a = field(rng), b = field(rng);
        double sa = fractional_shift(m, a), sb = fractional_shift(m, b);
        CHECK(std::abs(sa) <= bound * (1.0 + 1e-12));
        CHECK(std::abs(sa - sb) <=
              std::abs(m.slope_ppm_per_mt) * std::abs(a - b) * (1.0 + 1e-12));
    }
}

TEST_CASE("smoothing produces a C1 corner blend")
{
    MagnetoelasticModel hard;
    MagnetoelasticModel soft = hard;
    soft.smoothing_mt = 0.05;

    // identical well inside and well outside the window
    CHECK(fractional_shift(soft, 0.25) == fractional_shift(hard, 0.25));
    CHECK(fractional_shift(soft, -3.0) == fractional_shift(hard, -3.0));
    CHECK(fractional_shift(soft, 2.0) == fractional_shift(hard, 2.0));

    // derivative continuity at the blend edges of the upper corner
    auto deriv = [&](double h) {
        double dh = 1e-7;
        return (fractional_shift(soft, h + dh) - fractional_shift(soft, h - dh)) / (2.0 * dh);
    };
    CHECK(deriv(0.69 - 0.05) == doctest::Approx(-781.0).epsilon(1e-4));
    CHECK(std::abs(deriv(0.69 + 0.05)) < 1e-3);
    CHECK(deriv(0.69) == doctest::Approx(-781.0 / 2.0).epsilon(1e-4));
}

TEST_CASE("invalid models are rejected")
{
    MagnetoelasticModel m;
    m.h_low_mt = 1.0;
    m.h_high_mt = 0.0;
    CHECK_THROWS_AS(fractional_shift(m, 0.0), std::invalid_argument);

    MagnetoelasticModel n;
    n.smoothing_mt = -0.1;
    CHECK_THROWS_AS(fractional_shift(n, 0.0), std::invalid_argument);

    MagnetoelasticModel wide;
    wide.smoothing_mt = 1.0; // exceeds half the 0.88 mT window
    CHECK_THROWS_AS(fractional_shift(wide, 0.0), std::invalid_argument);
}

TEST_CASE("field_sweep matches elementwise evaluation")
{
    MagnetoelasticModel m;
    std::vector<double> fields{-4.0, -1.0, 0.0, 0.3, 0.69, 2.0};
    auto sweep = field_sweep(m, fields);
    REQUIRE(sweep.size() == fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i)
        CHECK(sweep[i] == fractional_shift(m, fields[i]));
}
