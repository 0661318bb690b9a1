#include "msaw/svgplot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace msaw {
namespace {

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#17becf", "#7f7f7f"};

int column_index(const CsvTable& data, const std::string& name)
{
    for (std::size_t i = 0; i < data.header.size(); ++i)
        if (data.header[i] == name)
            return (int)i;
    throw std::invalid_argument("emit_plot: missing column '" + name + "'");
}

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Round tick step to 1/2/5 times a power of ten.
double nice_step(double span, int target_ticks)
{
    if (span <= 0.0)
        return 1.0;
    double raw = span / target_ticks;
    double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double n = raw / mag;
    double step = n < 1.5 ? 1.0 : n < 3.5 ? 2.0 : n < 7.5 ? 5.0 : 10.0;
    return step * mag;
}

struct KindInfo {
    std::string x_col, y_col, group_col, x_label, y_label;
};

KindInfo kind_info(PlotKind kind)
{
    switch (kind) {
    case PlotKind::spectrum_db:
        return {"frequency_hz", "magnitude_db", "", "frequency (Hz)", "|S11| (dB)"};
    case PlotKind::time_envelope_db:
        return {"time_s", "level_db", "", "time (s)", "envelope (dB)"};
    case PlotKind::shift_vs_temperature:
        return {"temperature_c", "shift_ppm", "peak_id", "temperature (degC)", "relative shift (ppm)"};
    case PlotKind::shift_vs_field:
        return {"field_mt", "shift_ppm", "peak_id", "field (mT)", "relative shift (ppm)"};
    case PlotKind::compensated_overlay:
        return {"field_mt", "shift_ppm_compensated", "temperature_c", "field (mT)",
                "compensated shift (ppm)"};
    case PlotKind::dispersion_curve:
        return {"control", "phase_velocity_mps", "mode_index", "control variable", "phase velocity (m/s)"};
    }
    throw std::logic_error("unreachable");
}

} // namespace

PlotKind parse_plot_kind(const std::string& name)
{
    if (name == "spectrum_db")
        return PlotKind::spectrum_db;
    if (name == "time_envelope_db")
        return PlotKind::time_envelope_db;
    if (name == "shift_vs_temperature")
        return PlotKind::shift_vs_temperature;
    if (name == "shift_vs_field")
        return PlotKind::shift_vs_field;
    if (name == "compensated_overlay")
        return PlotKind::compensated_overlay;
    if (name == "dispersion_curve")
        return PlotKind::dispersion_curve;
    throw std::invalid_argument("unknown plot kind '" + name + "'");
}

std::string emit_plot(const PlotSpec& spec, const CsvTable& data)
{
    KindInfo info = kind_info(spec.kind);
    const int width = 800, height = 500;
    const int ml = 70, mr = 20, mt = 30, mb = 50;

    std::vector<Series> series;
    if (!data.rows.empty()) {
        int xi = column_index(data, info.x_col);
        int yi = column_index(data, info.y_col);
        int gi = -1;
        if (!info.group_col.empty()) {
            for (std::size_t i = 0; i < data.header.size(); ++i)
                if (data.header[i] == info.group_col)
                    gi = (int)i;
        }
        std::map<double, Series> grouped;
        for (auto& row : data.rows) {
            double key = gi >= 0 ? row[gi] : 0.0;
            auto& s = grouped[key];
            if (s.label.empty())
                s.label = gi >= 0 ? info.group_col + "=" + fmt(key) : info.y_col;
            s.points.emplace_back(row[xi], row[yi]);
        }
        for (auto& [key, s] : grouped)
            series.push_back(std::move(s));
    }

    double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    bool first = true;
    for (auto& s : series)
        for (auto& [x, y] : s.points) {
            if (first) {
                x_min = x_max = x;
                y_min = y_max = y;
                first = false;
            }
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
    if (x_max == x_min) {
        x_min -= 0.5;
        x_max += 0.5;
    }
    if (y_max == y_min) {
        y_min -= 0.5;
        y_max += 0.5;
    }

    auto px = [&](double x) { return ml + (x - x_min) / (x_max - x_min) * (width - ml - mr); };
    auto py = [&](double y) { return height - mb - (y - y_min) / (y_max - y_min) * (height - mt - mb); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    // axes
    svg << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr << "\" y2=\""
        << height - mb << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << height - mb
        << "\" stroke=\"black\"/>\n";

    double xs = nice_step(x_max - x_min, 6);
    for (double t = std::ceil(x_min / xs) * xs; t <= x_max + 1e-12 * xs; t += xs) {
        double x = px(t);
        svg << "<line x1=\"" << fmt(x) << "\" y1=\"" << height - mb << "\" x2=\"" << fmt(x) << "\" y2=\""
            << height - mb + 5 << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fmt(x) << "\" y=\"" << height - mb + 18
            << "\" font-size=\"11\" text-anchor=\"middle\">" << fmt(t) << "</text>\n";
    }
    double ys = nice_step(y_max - y_min, 6);
    for (double t = std::ceil(y_min / ys) * ys; t <= y_max + 1e-12 * ys; t += ys) {
        double y = py(t);
        svg << "<line x1=\"" << ml - 5 << "\" y1=\"" << fmt(y) << "\" x2=\"" << ml << "\" y2=\"" << fmt(y)
            << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << ml - 8 << "\" y=\"" << fmt(y + 4)
            << "\" font-size=\"11\" text-anchor=\"end\">" << fmt(t) << "</text>\n";
    }

    std::string x_label = spec.x_label.empty() ? info.x_label : spec.x_label;
    std::string y_label = spec.y_label.empty() ? info.y_label : spec.y_label;
    svg << "<text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 10
        << "\" font-size=\"13\" text-anchor=\"middle\">" << x_label << "</text>\n";
    svg << "<text x=\"15\" y=\"" << (mt + height - mb) / 2
        << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 15 "
        << (mt + height - mb) / 2 << ")\">" << y_label << "</text>\n";
    if (!spec.title.empty())
        svg << "<text x=\"" << width / 2 << "\" y=\"20\" font-size=\"14\" text-anchor=\"middle\">"
            << spec.title << "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        auto& s = series[si];
        const char* color = kPalette[si % (sizeof kPalette / sizeof kPalette[0])];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (auto& [x, y] : s.points)
            svg << fmt(px(x)) << "," << fmt(py(y)) << " ";
        svg << "\"/>\n";
        if (series.size() > 1) {
            int ly = mt + 15 * (int)si;
            svg << "<line x1=\"" << width - mr - 130 << "\" y1=\"" << ly << "\" x2=\"" << width - mr - 110
                << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
            svg << "<text x=\"" << width - mr - 105 << "\" y=\"" << ly + 4 << "\" font-size=\"11\">"
                << s.label << "</text>\n";
        }
    }

    svg << "</svg>\n";
    return svg.str();
}

} // namespace msaw
