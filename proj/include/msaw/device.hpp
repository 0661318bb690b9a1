#pragma once

#include "msaw/magnetics.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace msaw {

enum class PathKind { bare, coated };

struct EchoSegment {
    double length_wavelengths = 0.0;
    PathKind kind = PathKind::bare;
};

/// One echo of the reflective delay line: an ordered traversal of path
/// segments, a level in dB relative to full reflection, and a polarity.
struct EchoSpec {
    int id = 0;
    std::vector<EchoSegment> segments;
    double amplitude_db = 0.0;
    int polarity = 1;
};

struct DeviceGeometry {
    double wavelength = 9.2e-6;       // m
    int idt_pairs = 11;
    double metallization_ratio = 0.5;
    double path1_wavelengths = 120.0; // bare gap
    double path2_wavelengths = 180.0; // coated gap
    int reflector_count = 200;
    std::vector<EchoSpec> echoes;
};

struct EnvironmentState {
    double temperature_c = 25.0;
    double field_mt = -4.0;
    double reference_temperature_c = 25.0;
};

/// Velocities at the reference state plus the linear temperature and field
/// sensitivities. The bare path responds to temperature only (tcf1); the
/// coated path adds the magnetoelastic term (tcf2).
struct SensorPhysics {
    double v1_nominal = 0.0; // m/s, bare path at (T_ref, H_ref)
    double v2_nominal = 0.0; // m/s, coated path
    double tcf1_ppm_per_c = -67.7;
    double tcf2_ppm_per_c = -66.2;
    MagnetoelasticModel magnetoelastic;
};

struct FrequencyGrid {
    double f_start = 370e6; // Hz
    double f_stop = 450e6;
    int n_points = 4001;
};

/// Uniformly gridded complex one-port reflection record.
struct Spectrum {
    double f_start = 0.0;
    double f_stop = 0.0;
    int n_points = 0;
    std::vector<std::complex<double>> values;
    bool band_edge_warning = false;

    double df() const { return (f_stop - f_start) / (n_points - 1); }
    double frequency(int i) const { return f_start + i * df(); }
};

struct NoiseSpec {
    double snr_db = 40.0; // relative to the strongest time-domain echo peak
    std::uint64_t seed = 0;
};

/// f_r = v / lambda.
double nominal_frequency(double velocity, double wavelength);

double path_velocity(const SensorPhysics& physics, PathKind kind, const EnvironmentState& env);

/// Total traversal time of the echo's segments at the given environment.
double echo_delay(const DeviceGeometry& geometry, const SensorPhysics& physics, const EchoSpec& echo,
                  const EnvironmentState& env);

/// Two-transducer band shape [sin(N pi x)/(N pi x)]^2 with
/// x = (f - f_center)/f_center; equals 1 at f_center.
double idt_band_shape(const DeviceGeometry& geometry, double f, double f_center);

/// Carrier of an echo: delay-weighted mean path velocity over lambda.
double echo_center_frequency(const DeviceGeometry& geometry, const SensorPhysics& physics,
                             const EchoSpec& echo, const EnvironmentState& env);

/// Sum of band-limited delayed echoes, optionally with seeded complex white
/// noise. Deterministic for identical inputs and seed.
Spectrum synthesize_s11(const DeviceGeometry& geometry, const SensorPhysics& physics,
                        const EnvironmentState& env, const FrequencyGrid& grid,
                        const std::optional<NoiseSpec>& noise = std::nullopt);

/// Serial reference for the parallel synthesis kernel; bit-identical output.
Spectrum synthesize_s11_serial(const DeviceGeometry& geometry, const SensorPhysics& physics,
                               const EnvironmentState& env, const FrequencyGrid& grid,
                               const std::optional<NoiseSpec>& noise = std::nullopt);

/// Four-echo geometry of the fabricated device (levels for echoes 3 and 4
/// are free parameters, the source only quotes -18/-24 dB for echoes 1-2).
DeviceGeometry default_geometry();

/// Nominal velocities from the calibrated dispersion stacks plus the quoted
/// sensitivities.
SensorPhysics default_physics();

} // namespace msaw
