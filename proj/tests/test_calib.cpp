#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msaw/calib.hpp"
#include "msaw/magnetics.hpp"

#include <cmath>

using namespace msaw;

TEST_CASE("relative shift in ppm")
{
    CHECK(relative_shift(400e6, 400e6) == 0.0);
    CHECK(relative_shift(400e6 * (1.0 - 67.6e-6), 400e6) == doctest::Approx(-67.6).epsilon(1e-12));
    CHECK(relative_shift(400.0004e6, 400e6) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(relative_shift(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("least squares against a hand-computed example")
{
    // x = {0,1,2}, y = {0,1,1}: slope 1/2, intercept 1/6, R^2 = 3/4,
    // residual rms = sqrt(1/18)
    LinearFit fit = ols({0.0, 1.0, 2.0}, {0.0, 1.0, 1.0});
    CHECK(fit.slope == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(fit.r_squared == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(fit.residual_rms == doctest::Approx(std::sqrt(1.0 / 18.0)).epsilon(1e-12));
}

TEST_CASE("least squares recovers an exact line")
{
    std::vector<double> x, y;
    for (int i = 0; i < 9; ++i) {
        x.push_back(20.0 + 5.0 * i);
        y.push_back(-67.7 * x.back() + 3.25);
    }
    LinearFit fit = ols(x, y);
    CHECK(fit.slope == doctest::Approx(-67.7).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(3.25).epsilon(1e-9));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fit.residual_rms < 1e-9);

    CHECK_THROWS_AS(ols({1.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(ols({2.0, 2.0}, {0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("temperature fit recovers the generating coefficient exactly")
{
    const double f0 = 417.95e6, tcf = -67.7;
    std::vector<SweepRow> rows;
    for (double t = 25.0; t <= 65.0; t += 5.0)
        rows.push_back({t, -4.0, 1, f0 * (1.0 + tcf * (t - 25.0) * 1e-6)});

    TcfFit fit = fit_tcf(rows);
    CHECK(fit.tcf_ppm_per_c == doctest::Approx(tcf).epsilon(1e-12));
    CHECK(fit.fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));

    // one degree of heating gives -67.7 ppm by construction
    CHECK(relative_shift(rows[0].f_zero_hz * (1.0 + tcf * 1e-6), rows[0].f_zero_hz) ==
          doctest::Approx(-67.7).epsilon(1e-12));

    std::vector<SweepRow> flat(5, rows[0]);
    CHECK_THROWS_AS(fit_tcf(flat), std::invalid_argument);
    CHECK_THROWS_AS(fit_tcf({rows[0]}), std::invalid_argument);
}

TEST_CASE("magnetic fit recovers the window slope and the Hz-per-uT figure")
{
    MagnetoelasticModel model;
    const double f0 = 372.6e6; // -781 ppm/mT at 372.6 MHz is -291.0 Hz/uT
    std::vector<SweepRow> rows;
    for (double h = -4.0; h <= 3.0 + 1e-9; h += 0.05)
        rows.push_back({25.0, h, 2, f0 * (1.0 + fractional_shift(model, h) * 1e-6)});

    MagneticFit fit = fit_magnetic_sensitivity(rows, model.h_low_mt, model.h_high_mt);
    CHECK(fit.slope_ppm_per_mt == doctest::Approx(-781.0).epsilon(1e-10));
    CHECK(fit.hz_per_ut == doctest::Approx(-291.0).epsilon(1e-3));
    CHECK(fit.f_reference_hz == f0);
    CHECK(fit.fit.r_squared == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("magnetic fit edge cases")
{
    // everything on the saturated plateau: no samples inside the window
    std::vector<SweepRow> plateau;
    for (double h = -4.0; h < -0.5; h += 0.5)
        plateau.push_back({25.0, h, 2, 410e6});
    CHECK_THROWS_AS(fit_magnetic_sensitivity(plateau, -0.19, 0.69), std::invalid_argument);

    // repeated identical in-window field: slope 0 by convention
    std::vector<SweepRow> constant(3, SweepRow{25.0, 0.25, 2, 410e6});
    MagneticFit fit = fit_magnetic_sensitivity(constant, -0.19, 0.69);
    CHECK(fit.slope_ppm_per_mt == 0.0);

    CHECK_THROWS_AS(fit_magnetic_sensitivity({}, -0.19, 0.69), std::invalid_argument);
}

TEST_CASE("differential compensation removes the common thermal term")
{
    const double tcf1 = -67.7, tcf2 = -66.2;

    // magnetic shift for the full window: -781 * 0.69 = -538.89 ppm
    double mag = -781.0 * 0.69;
    for (double dt : {-15.0, 0.0, 7.5, 40.0}) {
        double shift1 = tcf1 * dt;
        double shift2 = tcf2 * dt + mag;
        CHECK(compensate(shift2, shift1, tcf1, tcf2) == doctest::Approx(mag).epsilon(1e-12));
    }

    // equal TCFs reduce to a plain difference
    CHECK(compensate(10.0, 4.0, -67.7, -67.7) == doctest::Approx(10.0 - 4.0).epsilon(1e-12));
    CHECK_THROWS_AS(compensate(1.0, 1.0, 0.0, -66.2), std::invalid_argument);
}

TEST_CASE("sweep compensation pairs rows and cancels a temperature offset")
{
    const double tcf1 = -67.7, tcf2 = -66.2;
    const double f10 = 417.95e6, f20 = 410.0e6;
    MagnetoelasticModel model;

    auto build = [&](double dt) {
        std::pair<std::vector<SweepRow>, std::vector<SweepRow>> out;
        for (double h = 1.0; h >= -4.0; h -= 0.5) { // deliberately descending
            double t = 25.0 + dt;
            out.first.push_back({t, h, 1, f10 * (1.0 + tcf1 * dt * 1e-6)});
            out.second.push_back(
                {t, h, 2, f20 * (1.0 + (tcf2 * dt + fractional_shift(model, h)) * 1e-6)});
        }
        return out;
    };

    auto cold = build(0.0);
    auto hot = build(30.0);
    auto c0 = compensate_sweep(cold.first, cold.second, tcf1, tcf2, f10, f20);
    auto c1 = compensate_sweep(hot.first, hot.second, tcf1, tcf2, f10, f20);
    REQUIRE(c0.size() == c1.size());
    for (std::size_t i = 0; i < c0.size(); ++i) {
        // output is sorted ascending in field
        if (i > 0)
            CHECK(c0[i].field_mt >= c0[i - 1].field_mt);
        // a 30 C offset moves the raw shifts by ~2000 ppm but not the result
        CHECK(std::abs(c1[i].shift2_ppm - c0[i].shift2_ppm) > 1000.0);
        CHECK(std::abs(c1[i].shift_compensated_ppm - c0[i].shift_compensated_ppm) < 1.0);
        // compensated value equals the magnetoelastic curve itself
        CHECK(c0[i].shift_compensated_ppm ==
              doctest::Approx(fractional_shift(model, c0[i].field_mt)).epsilon(1e-9));
    }
}

TEST_CASE("sweep compensation input validation")
{
    std::vector<SweepRow> p1{{25.0, -4.0, 1, 417.95e6}, {25.0, -3.0, 1, 417.95e6}};
    std::vector<SweepRow> p2{{25.0, -4.0, 2, 410.0e6}};
    CHECK_THROWS_WITH_AS(compensate_sweep(p1, p2, -67.7, -66.2),
                         doctest::Contains("missing indices 1"), std::invalid_argument);

    p2.push_back({26.0, -3.0, 2, 410.0e6}); // temperature mismatch at index 1
    CHECK_THROWS_WITH_AS(compensate_sweep(p1, p2, -67.7, -66.2), doctest::Contains("index 1"),
                         std::invalid_argument);

    CHECK_THROWS_AS(compensate_sweep({}, {}, -67.7, -66.2), std::invalid_argument);
}
