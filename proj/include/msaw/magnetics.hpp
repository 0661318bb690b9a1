#pragma once

#include <vector>

namespace msaw {

/// Phenomenological delta-E response of the magnetic film along its easy
/// axis: linear with slope S inside [h_low, h_high], saturated outside, no
/// hysteresis. Shifts are reported relative to the response at h_ref.
struct MagnetoelasticModel {
    double slope_ppm_per_mt = -781.0; // S
    double h_low_mt = -0.19;          // linear window
    double h_high_mt = 0.69;
    double smoothing_mt = 0.0;        // half-width of the C1 corner blend, 0 = hard clamp
    double h_ref_mt = -4.0;           // sweep start, the zero-shift reference

    void validate() const;
};

/// Fractional velocity shift in ppm at field h, relative to h_ref.
double fractional_shift(const MagnetoelasticModel& model, double h_mt);

/// Elementwise fractional_shift.
std::vector<double> field_sweep(const MagnetoelasticModel& model, const std::vector<double>& h_mt);

} // namespace msaw
