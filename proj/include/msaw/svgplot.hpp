#pragma once

#include "msaw/csv.hpp"

#include <string>

namespace msaw {

enum class PlotKind {
    spectrum_db,
    time_envelope_db,
    shift_vs_temperature,
    shift_vs_field,
    compensated_overlay,
    dispersion_curve,
};

struct PlotSpec {
    PlotKind kind = PlotKind::spectrum_db;
    std::string title;
    std::string x_label; // empty: kind default
    std::string y_label;
};

PlotKind parse_plot_kind(const std::string& name);

/// Standalone SVG chart from the CSV columns the kind requires; throws
/// naming any missing column. Byte-deterministic for identical input.
std::string emit_plot(const PlotSpec& spec, const CsvTable& data);

} // namespace msaw
