#pragma once

#include <optional>
#include <vector>

namespace msaw {

/// One tracked measurement: environment controls plus the zero-phase
/// frequency of one peak.
struct SweepRow {
    double temperature_c = 0.0;
    double field_mt = 0.0;
    int peak_id = 0;
    double f_zero_hz = 0.0;
};

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double residual_rms = 0.0;
};

/// Fitted sensitivities with diagnostics.
struct SensitivityModel {
    double tcf1_ppm_per_c = 0.0;
    double tcf2_ppm_per_c = 0.0;
    double magnetic_slope_ppm_per_mt = 0.0;
    double h_low_mt = -0.19;
    double h_high_mt = 0.69;
    LinearFit tcf1_fit, tcf2_fit, magnetic_fit;
};

/// (f - f0)/f0 in ppm. Throws on nonpositive reference.
double relative_shift(double f_hz, double f0_hz);

/// Ordinary least squares y = slope*x + intercept.
LinearFit ols(const std::vector<double>& x, const std::vector<double>& y);

struct TcfFit {
    double tcf_ppm_per_c = 0.0;
    LinearFit fit;
};

/// TCF of one peak from a temperature sweep at fixed field. Shifts are taken
/// against the first row. Throws if all temperatures coincide.
TcfFit fit_tcf(const std::vector<SweepRow>& rows);

struct MagneticFit {
    double slope_ppm_per_mt = 0.0;
    double hz_per_ut = 0.0;
    double f_reference_hz = 0.0;
    LinearFit fit;
};

/// Magnetic slope of a field sweep at fixed temperature, restricted to the
/// linear window. Shifts are taken against the first row; the Hz/uT figure
/// uses the reference frequency. Throws if fewer than 2 in-window samples.
MagneticFit fit_magnetic_sensitivity(const std::vector<SweepRow>& rows, double h_low_mt, double h_high_mt);

/// Differential temperature compensation:
/// shift2 - (tcf2/tcf1) * shift1, in ppm.
double compensate(double shift2_ppm, double shift1_ppm, double tcf1_ppm_per_c, double tcf2_ppm_per_c);

struct CompensatedPoint {
    double field_mt = 0.0;
    double shift1_ppm = 0.0;
    double shift2_ppm = 0.0;
    double shift_compensated_ppm = 0.0;
};

/// Pointwise compensation of a field sweep. peak1/peak2 rows pair by sweep
/// index and must agree on (T, H). Reference frequencies default to each
/// peak's first row; pass explicit values to share a reference across
/// several sweeps. Output sorted by field.
std::vector<CompensatedPoint> compensate_sweep(const std::vector<SweepRow>& peak1,
                                               const std::vector<SweepRow>& peak2,
                                               double tcf1_ppm_per_c, double tcf2_ppm_per_c,
                                               std::optional<double> f10_ref_hz = std::nullopt,
                                               std::optional<double> f20_ref_hz = std::nullopt);

} // namespace msaw
