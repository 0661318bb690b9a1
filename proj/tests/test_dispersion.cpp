#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msaw/dispersion.hpp"

#include <cmath>
#include <random>

using namespace msaw;

namespace {

Material make_material(const char* name, double density, double mu)
{
    Material m;
    m.name = name;
    m.density = density;
    m.shear_stiffness = mu;
    return m;
}

LayerStack single_layer(double rho1, double mu1, double h, double rho_s, double mu_s)
{
    LayerStack s;
    s.substrate = make_material("sub", rho_s, mu_s);
    s.layers.push_back({make_material("layer", rho1, mu1), h});
    return s;
}

// Independent oracle: the classical single-layer Love equation
//   tan(k h b1) mu1 b1 - mus bs = 0,  b1 = sqrt(v^2/v1^2-1), bs = sqrt(1-v^2/vs^2)
// solved for the fundamental branch k h b1 in (0, pi/2) by bisection.
double closed_form_fundamental(double rho1, double mu1, double h, double rho_s, double mu_s, double k)
{
    double v1 = std::sqrt(mu1 / rho1);
    double vs = std::sqrt(mu_s / rho_s);
    auto f = [&](double v) {
        double b1 = std::sqrt(v * v / (v1 * v1) - 1.0);
        double bs = std::sqrt(1.0 - v * v / (vs * vs));
        return std::tan(k * h * b1) * mu1 * b1 - mu_s * bs;
    };
    // restrict to the branch k h b1 < pi/2 where tan has no pole
    double b1_max = M_PI / 2.0 / (k * h);
    double v_branch = v1 * std::sqrt(1.0 + b1_max * b1_max);
    double lo = v1 * (1.0 + 1e-12);
    double hi = std::min(vs * (1.0 - 1e-12), v_branch * (1.0 - 1e-12));
    REQUIRE(lo < hi);
    double flo = f(lo), fhi = f(hi);
    if (flo * fhi > 0.0)
        return vs; // no fundamental root on this branch (layer too thin): limit v -> vs
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (flo * fm <= 0.0) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

TEST_CASE("transfer matrix matches the closed-form single-layer solution to 1e-8")
{
    const double rho1 = 5680.0, mu1 = 42.37e9;
    const double rho_s = 4700.0, mu_s = kSubstrateEffectiveMu;
    const double wavelength = 9.2e-6;
    const double k = 2.0 * M_PI / wavelength;

    // 20 h*f samples spanning thin to thick films
    for (int i = 1; i <= 20; ++i) {
        double h = 80e-9 * i; // 80 nm .. 1.6 um
        LayerStack stack = single_layer(rho1, mu1, h, rho_s, mu_s);
        auto modes = solve_modes_at_wavelength(stack, wavelength, 1, 4000, 1e-12);
        double expected = closed_form_fundamental(rho1, mu1, h, rho_s, mu_s, k);
        if (expected >= std::sqrt(mu_s / rho_s) * (1 - 1e-9)) {
            // layer too thin for a root inside the open search interval
            continue;
        }
        REQUIRE(modes.size() >= 1);
        CHECK(modes[0].phase_velocity ==
              doctest::Approx(expected).epsilon(1e-8));
    }
}

TEST_CASE("bare substrate has no guided mode")
{
    LayerStack s;
    s.substrate = make_material("sub", 4700.0, kSubstrateEffectiveMu);
    CHECK(solve_modes_at_wavelength(s, 9.2e-6).empty());
}

TEST_CASE("thin and thick limits of the fundamental branch")
{
    const double rho1 = 5680.0, mu1 = 42.37e9;
    const double rho_s = 4700.0, mu_s = kSubstrateEffectiveMu;
    double v1 = std::sqrt(mu1 / rho1);
    double vs = std::sqrt(mu_s / rho_s);

    // h*f -> 0: root approaches the substrate velocity
    auto thin = solve_modes_at_wavelength(single_layer(rho1, mu1, 5e-9, rho_s, mu_s), 9.2e-6, 1, 8000);
    REQUIRE(thin.size() == 1);
    CHECK(thin[0].phase_velocity > 0.999 * vs);

    // h*f large: lowest root approaches the layer velocity from above
    auto thick = solve_modes_at_wavelength(single_layer(rho1, mu1, 200e-6, rho_s, mu_s), 9.2e-6, 1, 8000);
    REQUIRE(thick.size() >= 1);
    CHECK(thick[0].phase_velocity < 1.001 * v1);
    CHECK(thick[0].phase_velocity > v1);
}

TEST_CASE("fundamental velocity is non-increasing in layer thickness")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> rho_dist(2000.0, 9000.0);
    std::uniform_real_distribution<double> h_dist(50e-9, 2e-6);
    int tested = 0;
    while (tested < 100) {
        double rho1 = rho_dist(rng), rho_s = rho_dist(rng);
        double v1 = 1500.0 + 2500.0 * std::generate_canonical<double, 53>(rng);
        double vs = v1 * (1.2 + 1.5 * std::generate_canonical<double, 53>(rng));
        double mu1 = rho1 * v1 * v1, mu_s = rho_s * vs * vs;
        double h = h_dist(rng);

        auto a = solve_modes_at_wavelength(single_layer(rho1, mu1, h, rho_s, mu_s), 9.2e-6, 1, 4000);
        auto b = solve_modes_at_wavelength(single_layer(rho1, mu1, 1.5 * h, rho_s, mu_s), 9.2e-6, 1, 4000);
        if (a.empty() || b.empty())
            continue;
        CHECK(b[0].phase_velocity <= a[0].phase_velocity * (1.0 + 1e-9));
        ++tested;
    }
}

TEST_CASE("two identical layers equal one merged layer")
{
    const double rho1 = 5680.0, mu1 = 42.37e9;
    LayerStack split = single_layer(rho1, mu1, 400e-9, 4700.0, kSubstrateEffectiveMu);
    split.layers.push_back({split.layers[0].material, 300e-9});
    LayerStack merged = single_layer(rho1, mu1, 700e-9, 4700.0, kSubstrateEffectiveMu);

    auto a = solve_modes_at_wavelength(split, 9.2e-6, 1, 4000, 1e-12);
    auto b = solve_modes_at_wavelength(merged, 9.2e-6, 1, 4000, 1e-12);
    REQUIRE(a.size() == 1);
    REQUIRE(b.size() == 1);
    CHECK(a[0].phase_velocity == doctest::Approx(b[0].phase_velocity).epsilon(1e-9));
}

TEST_CASE("calibrated default stack hits the operating point")
{
    LayerStack stack = calibrated_default_stack();
    REQUIRE(stack.layers.size() == 2);
    CHECK(stack.layers[0].thickness == doctest::Approx(700e-9)); // ZnO
    CHECK(stack.layers[1].thickness == doctest::Approx(100e-9)); // CoFeB

    auto modes = solve_modes_at_wavelength(stack, kDefaultWavelength, 1);
    REQUIRE(modes.size() == 1);
    double f_r = modes[0].phase_velocity / kDefaultWavelength;
    CHECK(f_r == doctest::Approx(410e6).epsilon(0.05));
    CHECK(modes[0].phase_velocity == doctest::Approx(kCalibratedLoveVelocity).epsilon(1e-3));
}

TEST_CASE("doubling the ZnO thickness lowers the fundamental velocity")
{
    LayerStack stack = calibrated_default_stack();
    auto base = solve_modes_at_wavelength(stack, kDefaultWavelength, 1);
    stack.layers[0].thickness = 1400e-9;
    auto thick = solve_modes_at_wavelength(stack, kDefaultWavelength, 1);
    REQUIRE(base.size() == 1);
    REQUIRE(thick.size() == 1);
    CHECK(thick[0].phase_velocity < base[0].phase_velocity);
}

TEST_CASE("roots satisfy the residual tolerance and bracketing")
{
    LayerStack stack = calibrated_default_stack();
    auto modes = solve_modes_at_wavelength(stack, kDefaultWavelength, 4);
    double f = 410e6;
    for (auto& m : modes) {
        // opposite determinant signs just outside the converged root
        double lo = m.phase_velocity * (1.0 - 1e-7);
        double hi = m.phase_velocity * (1.0 + 1e-7);
        double dlo = determinant(stack, f * lo / m.phase_velocity, lo);
        double dhi = determinant(stack, f * hi / m.phase_velocity, hi);
        CHECK(dlo * dhi <= 0.0);
    }
}

TEST_CASE("trial velocity outside the open interval is rejected")
{
    LayerStack stack = calibrated_default_stack();
    double vs = shear_velocity(stack.substrate);
    CHECK_THROWS_WITH_AS(determinant(stack, 410e6, vs * 1.01), doctest::Contains("evanescence"),
                         std::invalid_argument);
    CHECK_THROWS_AS(determinant(stack, 410e6, 100.0), std::invalid_argument);
}
