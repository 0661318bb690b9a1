#include "msaw/device.hpp"

#include "msaw/dispersion.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace msaw {

double nominal_frequency(double velocity, double wavelength)
{
    if (velocity <= 0.0 || wavelength <= 0.0)
        throw std::invalid_argument("nominal_frequency: velocity and wavelength must be > 0");
    return velocity / wavelength;
}

double path_velocity(const SensorPhysics& physics, PathKind kind, const EnvironmentState& env)
{
    double dt = env.temperature_c - env.reference_temperature_c;
    if (kind == PathKind::bare)
        return physics.v1_nominal * (1.0 + physics.tcf1_ppm_per_c * dt * 1e-6);
    double mag = fractional_shift(physics.magnetoelastic, env.field_mt);
    return physics.v2_nominal * (1.0 + physics.tcf2_ppm_per_c * dt * 1e-6 + mag * 1e-6);
}

double echo_delay(const DeviceGeometry& geometry, const SensorPhysics& physics, const EchoSpec& echo,
                  const EnvironmentState& env)
{
    if (echo.segments.empty())
        throw std::invalid_argument("echo_delay: echo has no segments");
    double tau = 0.0;
    for (auto& seg : echo.segments)
        tau += seg.length_wavelengths * geometry.wavelength / path_velocity(physics, seg.kind, env);
    return tau;
}

double idt_band_shape(const DeviceGeometry& geometry, double f, double f_center)
{
    if (f_center <= 0.0)
        throw std::invalid_argument("idt_band_shape: f_center must be > 0");
    double x = (f - f_center) / f_center;
    double arg = geometry.idt_pairs * M_PI * x;
    if (arg == 0.0)
        return 1.0;
    double s = std::sin(arg) / arg;
    return s * s;
}

double echo_center_frequency(const DeviceGeometry& geometry, const SensorPhysics& physics,
                             const EchoSpec& echo, const EnvironmentState& env)
{
    double total_wavelengths = 0.0;
    for (auto& seg : echo.segments)
        total_wavelengths += seg.length_wavelengths;
    double tau = echo_delay(geometry, physics, echo, env);
    double v_mean = total_wavelengths * geometry.wavelength / tau;
    return v_mean / geometry.wavelength;
}

namespace {

Spectrum synthesize_impl(const DeviceGeometry& geometry, const SensorPhysics& physics,
                         const EnvironmentState& env, const FrequencyGrid& grid,
                         const std::optional<NoiseSpec>& noise, bool parallel)
{
    if (grid.n_points < 2 || !(grid.f_start < grid.f_stop))
        throw std::invalid_argument("synthesize_s11: grid needs n_points >= 2 and f_start < f_stop");

    struct EchoTerm {
        double amplitude;
        double f_center;
        double tau;
    };
    std::vector<EchoTerm> terms;
    terms.reserve(geometry.echoes.size());
    for (auto& echo : geometry.echoes) {
        EchoTerm t;
        t.amplitude = std::pow(10.0, echo.amplitude_db / 20.0) * echo.polarity;
        t.f_center = echo_center_frequency(geometry, physics, echo, env);
        t.tau = echo_delay(geometry, physics, echo, env);
        terms.push_back(t);
    }

    Spectrum s;
    s.f_start = grid.f_start;
    s.f_stop = grid.f_stop;
    s.n_points = grid.n_points;
    s.values.resize(grid.n_points);

    const double df = s.df();
    auto bin = [&](int i) {
        double f = grid.f_start + i * df;
        std::complex<double> acc = 0.0;
        for (auto& t : terms) {
            double a = t.amplitude * idt_band_shape(geometry, f, t.f_center);
            double ph = -2.0 * M_PI * f * t.tau;
            acc += a * std::complex<double>(std::cos(ph), std::sin(ph));
        }
        return acc;
    };

    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < grid.n_points; ++i)
            s.values[i] = bin(i);
    } else {
        for (int i = 0; i < grid.n_points; ++i)
            s.values[i] = bin(i);
    }

    // Band-edge check: every echo's shape should be below -60 dB at the grid
    // edges, otherwise the record truncates meaningful energy.
    const double edge_limit = std::pow(10.0, -60.0 / 20.0);
    for (auto& t : terms) {
        if (idt_band_shape(geometry, grid.f_start, t.f_center) > edge_limit ||
            idt_band_shape(geometry, grid.f_stop, t.f_center) > edge_limit)
            s.band_edge_warning = true;
    }

    if (noise) {
        // SNR is defined against the strongest time-domain echo peak. With a
        // length-N inverse transform an echo peaks at amplitude * mean band
        // shape, and per-bin frequency noise of std sigma gives time-domain
        // std sigma/sqrt(N); both scale identically under zero padding.
        double peak = 0.0;
        for (auto& t : terms) {
            double mean_shape = 0.0;
            for (int i = 0; i < grid.n_points; ++i)
                mean_shape += idt_band_shape(geometry, grid.f_start + i * df, t.f_center);
            mean_shape /= grid.n_points;
            peak = std::max(peak, std::abs(t.amplitude) * mean_shape);
        }
        double sigma_t = peak * std::pow(10.0, -noise->snr_db / 20.0);
        double sigma_f = sigma_t * std::sqrt((double)grid.n_points);
        std::mt19937_64 rng(noise->seed);
        std::normal_distribution<double> gauss(0.0, sigma_f / std::sqrt(2.0));
        for (auto& v : s.values)
            v += std::complex<double>(gauss(rng), gauss(rng));
    }
    return s;
}

} // namespace

Spectrum synthesize_s11(const DeviceGeometry& geometry, const SensorPhysics& physics,
                        const EnvironmentState& env, const FrequencyGrid& grid,
                        const std::optional<NoiseSpec>& noise)
{
    return synthesize_impl(geometry, physics, env, grid, noise, true);
}

Spectrum synthesize_s11_serial(const DeviceGeometry& geometry, const SensorPhysics& physics,
                               const EnvironmentState& env, const FrequencyGrid& grid,
                               const std::optional<NoiseSpec>& noise)
{
    return synthesize_impl(geometry, physics, env, grid, noise, false);
}

DeviceGeometry default_geometry()
{
    DeviceGeometry g;
    g.echoes = {
        {1, {{120.0, PathKind::bare}}, -18.0, 1},
        {2, {{180.0, PathKind::coated}}, -24.0, 1},
        {3, {{120.0, PathKind::bare}, {120.0, PathKind::bare}}, -30.0, 1},
        {4, {{120.0, PathKind::bare}, {180.0, PathKind::coated}}, -28.0, 1},
    };
    return g;
}

SensorPhysics default_physics()
{
    SensorPhysics p;
    auto bare = solve_modes_at_wavelength(calibrated_bare_stack(), kDefaultWavelength, 1);
    auto coated = solve_modes_at_wavelength(calibrated_default_stack(), kDefaultWavelength, 1);
    if (bare.empty() || coated.empty())
        throw std::runtime_error("default_physics: calibrated stacks lost their fundamental mode");
    p.v1_nominal = bare.front().phase_velocity;
    p.v2_nominal = coated.front().phase_velocity;
    return p;
}

} // namespace msaw
