#pragma once

#include "msaw/device.hpp"

#include <complex>
#include <vector>

namespace msaw {

/// Complex baseband time record obtained from a band-limited spectrum.
struct TimeResponse {
    double t_start = 0.0;
    double dt = 0.0;
    std::vector<std::complex<double>> values;
    // Source grid metadata, kept so the record can be transformed back.
    double f_start = 0.0;
    double f_stop = 0.0;
    int source_points = 0;

    double time(int i) const { return t_start + i * dt; }
};

enum class GateWindow { rectangular, cosine_tapered };

struct Gate {
    double center_s = 0.0;
    double width_s = 0.0;
    GateWindow window = GateWindow::cosine_tapered;
    double taper_fraction = 0.25; // Tukey parameter, ignored for rectangular
};

struct TrackedFrequency {
    double f_zero_hz = 0.0;
    double phase_slope_rad_per_hz = 0.0;
    int peak_id = 0;
};

struct DetectedPeak {
    double time_s = 0.0;
    double level_db = 0.0;
};

struct PeakList {
    std::vector<DetectedPeak> peaks;
    bool fewer_than_requested = false;
};

/// Inverse transform of the record interpreted as complex baseband about the
/// grid. The record is zero padded to a power of two at least
/// zero_pad_factor times the source length; dt = 1/(padded_length * df).
/// Normalization is 1/source_points, so a unit-amplitude flat-band echo at
/// delay tau peaks near 1 within dt/2 of tau.
TimeResponse to_time_domain(const Spectrum& spectrum, int zero_pad_factor = 4);

/// Local maxima of |envelope| in descending level with greedy suppression
/// inside min_separation; equal levels resolve to the earlier time. Levels
/// are reported in dB relative to level_reference.
PeakList detect_peaks(const TimeResponse& tr, int count, double min_separation_s,
                      double level_reference = 1.0);

/// Envelope peak of a unit-amplitude echo (the mean band shape over the
/// grid); the level reference that makes detected levels read in the echo's
/// configured dB.
double unit_echo_envelope_peak(const DeviceGeometry& geometry, const Spectrum& spectrum,
                               double f_center);

/// Window the time record with the gate and transform back onto the original
/// frequency grid.
Spectrum gate_and_return(const Spectrum& spectrum, const Gate& gate, int zero_pad_factor = 4);

/// Standard 2*pi jump removal over the whole record. The analysis band is
/// the contiguous run of samples within band_threshold_db of the record
/// maximum; a zero-magnitude sample inside it is an error.
std::vector<double> unwrap_phase(const Spectrum& spectrum, double band_threshold_db = -40.0);

/// Zero crossing of the unwrapped phase inside [f_lo, f_hi], after reducing
/// the phase by the nearest 2*pi multiple at the band amplitude maximum.
/// Multiple crossings resolve to the one nearest the maximum (tie: lower
/// frequency).
TrackedFrequency track_zero_phase(const Spectrum& spectrum, double f_lo, double f_hi);

struct InterrogationSettings {
    int zero_pad_factor = 4;
    int peak_count = 4;
    double min_separation_s = 80e-9;
    double gate_width_s = 0.0; // <= 0: half the closest detected peak spacing
    GateWindow gate_window = GateWindow::cosine_tapered;
    double taper_fraction = 0.25;
    double search_halfwidth_hz = 8e6;
};

struct PeakReading {
    int peak_id = 0; // 1-based, in time order
    double gate_center_s = 0.0;
    double f_zero_hz = 0.0;
    double level_db = 0.0;
    double phase_slope_rad_per_hz = 0.0;
};

/// Full reader chain for one peak: detect, gate, return to the frequency
/// domain, track the zero-phase frequency. peak_index is 1-based in time
/// order. An explicit gate_center_s overrides detection (keeps the gate
/// fixed across a sweep).
PeakReading interrogate_peak(const Spectrum& spectrum, int peak_index,
                             const InterrogationSettings& settings = {},
                             double level_reference = 1.0, double gate_center_s = 0.0);

} // namespace msaw
