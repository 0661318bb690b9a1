#pragma once

#include "msaw/device.hpp"

#include <complex>
#include <string>
#include <vector>

namespace msaw {

enum class FrequencyUnit { Hz, kHz, MHz, GHz };
enum class SparamFormat { RI, MA, DB };

/// One-port Touchstone v1 record. Frequencies are stored in Hz regardless of
/// the header unit; values as complex reflection coefficients.
struct TouchstoneRecord {
    FrequencyUnit unit = FrequencyUnit::Hz;
    SparamFormat format = SparamFormat::RI;
    double reference_ohms = 50.0;
    std::vector<std::string> comments; // '!' lines, without the marker
    std::vector<std::pair<double, std::complex<double>>> rows;
};

/// Parses one-port Touchstone v1 text. Case-insensitive header, '!' comments
/// skipped (and preserved), RI/MA/DB converted to complex on load. Throws
/// with the offending line number on a missing header, wrong column count or
/// non-monotonic frequency.
TouchstoneRecord read_s1p(const std::string& text);

/// Canonical header plus data rows in the requested format. Round-trips
/// values within 1e-9 relative.
std::string write_s1p(const TouchstoneRecord& record, SparamFormat format = SparamFormat::RI);

/// Uniform-grid views. to_spectrum rejects non-uniform grids.
Spectrum to_spectrum(const TouchstoneRecord& record, double grid_tolerance = 1e-6);
TouchstoneRecord from_spectrum(const Spectrum& spectrum);

double frequency_unit_scale(FrequencyUnit unit);

} // namespace msaw
