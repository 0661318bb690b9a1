// Command-line front end: simulate, interrogate, calibrate, compensate,
// decode, sweep, disperse, magcurve, plot.

#include "msaw/calib.hpp"
#include "msaw/csv.hpp"
#include "msaw/device.hpp"
#include "msaw/dispersion.hpp"
#include "msaw/pipeline.hpp"
#include "msaw/rfid.hpp"
#include "msaw/scenario.hpp"
#include "msaw/svgplot.hpp"
#include "msaw/touchstone.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace {

using namespace msaw;

struct GlobalOpts {
    std::optional<std::uint64_t> seed;
    std::optional<double> snr_db;
    bool strict_config = true;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot write '" + path + "'");
    out << content;
}

std::string resolve_scenario_path(const std::string& path)
{
    if (std::ifstream(path).good())
        return path;
    if (const char* dir = std::getenv("MSAW_SCENARIO_DIR")) {
        std::string alt = std::string(dir) + "/" + path;
        if (std::ifstream(alt).good())
            return alt;
    }
    throw std::invalid_argument("scenario file '" + path + "' not found");
}

Scenario load_scenario_opts(const std::string& path, const GlobalOpts& g)
{
    std::string text = path.empty() ? "{}" : read_file(resolve_scenario_path(path));
    std::vector<std::string> warnings;
    Scenario sc = load_scenario(text, g.strict_config, &warnings);
    for (auto& w : warnings)
        std::cerr << "warning: " << w << "\n";
    if (g.snr_db) {
        NoiseSpec ns = sc.noise.value_or(NoiseSpec{});
        ns.snr_db = *g.snr_db;
        sc.noise = ns;
    }
    if (g.seed && sc.noise)
        sc.noise->seed = *g.seed;
    return sc;
}

std::vector<double> parse_range(const std::string& text)
{
    // start:stop:step, inclusive of stop when exactly reachable
    double start, stop, step;
    char c1, c2;
    std::istringstream ss(text);
    if (!(ss >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' || step == 0.0)
        throw std::invalid_argument("bad range '" + text + "', expected start:stop:step");
    std::vector<double> out;
    double tol = std::abs(step) * 1e-9;
    if (step > 0)
        for (double v = start; v <= stop + tol; v += step)
            out.push_back(v);
    else
        for (double v = start; v >= stop - tol; v += step)
            out.push_back(v);
    if (out.empty())
        throw std::invalid_argument("empty range '" + text + "'");
    return out;
}

Spectrum acquire_spectrum(const Scenario& sc, const std::string& s1p_path)
{
    if (!s1p_path.empty())
        return to_spectrum(read_s1p(read_file(s1p_path)));
    return synthesize_s11(effective_geometry(sc), sc.physics, sc.environment, sc.grid, sc.noise);
}

// Echo carriers in time order, for per-peak level references.
std::vector<double> echo_carriers_by_delay(const Scenario& sc, const DeviceGeometry& geom)
{
    std::vector<std::pair<double, double>> delay_fc;
    for (auto& e : geom.echoes)
        delay_fc.emplace_back(echo_delay(geom, sc.physics, e, sc.environment),
                              echo_center_frequency(geom, sc.physics, e, sc.environment));
    std::sort(delay_fc.begin(), delay_fc.end());
    std::vector<double> out;
    for (auto& [d, fc] : delay_fc)
        out.push_back(fc);
    return out;
}

PeakReading read_peak(const Scenario& sc, const Spectrum& spectrum, int peak_index)
{
    DeviceGeometry geom = effective_geometry(sc);
    auto carriers = echo_carriers_by_delay(sc, geom);
    double ref = 1.0;
    if (peak_index >= 1 && peak_index <= (int)carriers.size())
        ref = unit_echo_envelope_peak(geom, spectrum, carriers[peak_index - 1]);
    InterrogationSettings settings = sc.interrogation;
    settings.peak_count = std::max(settings.peak_count, (int)geom.echoes.size());
    return interrogate_peak(spectrum, peak_index, settings, ref);
}

std::vector<std::string> provenance(const Scenario& sc)
{
    std::vector<std::string> out;
    if (sc.noise)
        out.push_back("seed " + std::to_string(sc.noise->seed) + ", snr_db " +
                      format_number(sc.noise->snr_db));
    else
        out.push_back("noise off");
    return out;
}

int cmd_simulate(const std::string& scenario_path, const GlobalOpts& g, const std::string& out_s1p,
                 const std::string& out_csv, const std::string& out_time_csv)
{
    Scenario sc = load_scenario_opts(scenario_path, g);
    DeviceGeometry geom = effective_geometry(sc);
    Spectrum s = synthesize_s11(geom, sc.physics, sc.environment, sc.grid, sc.noise);
    if (s.band_edge_warning)
        std::cerr << "warning: frequency grid truncates echo band above -60 dB at an edge\n";

    if (!out_s1p.empty())
        write_file(out_s1p, write_s1p(from_spectrum(s)));
    if (!out_csv.empty()) {
        CsvTable t;
        t.header = {"frequency_hz", "s_real", "s_imag", "magnitude_db"};
        for (int i = 0; i < s.n_points; ++i) {
            double mag = std::abs(s.values[i]);
            t.rows.push_back({s.frequency(i), s.values[i].real(), s.values[i].imag(),
                              mag > 0 ? 20.0 * std::log10(mag) : -400.0});
        }
        std::ofstream out(out_csv);
        write_csv(out, t, provenance(sc));
    }
    if (!out_time_csv.empty()) {
        TimeResponse tr = to_time_domain(s, sc.interrogation.zero_pad_factor);
        auto carriers = echo_carriers_by_delay(sc, geom);
        double ref = carriers.empty() ? 1.0 : unit_echo_envelope_peak(geom, s, carriers.front());
        CsvTable t;
        t.header = {"time_s", "level_db"};
        // trim to the delay span of interest (up to 4x the last echo)
        double t_max = 4e-6;
        for (auto& e : geom.echoes)
            t_max = std::max(t_max, 2.0 * echo_delay(geom, sc.physics, e, sc.environment));
        for (std::size_t i = 0; i < tr.values.size() && tr.time((int)i) <= t_max; ++i) {
            double mag = std::abs(tr.values[i]) / ref;
            t.rows.push_back({tr.time((int)i), mag > 0 ? 20.0 * std::log10(mag) : -400.0});
        }
        std::ofstream out(out_time_csv);
        write_csv(out, t, provenance(sc));
    }
    if (out_s1p.empty() && out_csv.empty() && out_time_csv.empty())
        std::cout << write_s1p(from_spectrum(s));
    return 0;
}

int cmd_interrogate(const std::string& scenario_path, const GlobalOpts& g, const std::string& in_s1p,
                    const std::vector<int>& peaks, const std::string& out_csv)
{
    Scenario sc = load_scenario_opts(scenario_path, g);
    Spectrum s = acquire_spectrum(sc, in_s1p);
    CsvTable t;
    t.header = {"peak_id", "gate_center_s", "f_zero_hz", "level_db"};
    for (int p : peaks) {
        PeakReading r = read_peak(sc, s, p);
        t.rows.push_back({(double)r.peak_id, r.gate_center_s, r.f_zero_hz, r.level_db});
    }
    if (out_csv.empty()) {
        write_csv(std::cout, t, provenance(sc));
    } else {
        std::ofstream out(out_csv);
        write_csv(out, t, provenance(sc));
    }
    return 0;
}

int cmd_sweep(const std::string& scenario_path, const GlobalOpts& g, const std::string& vary_name,
              const std::string& vary_range, const std::vector<int>& peaks, const std::string& out_csv,
              double drift_c)
{
    Scenario sc = load_scenario_opts(scenario_path, g);
    if (vary_name != "temperature" && vary_name != "field")
        throw std::invalid_argument("--vary expects 'temperature' or 'field'");
    std::vector<double> points = parse_range(vary_range);

    struct Row {
        double t, h, set_t;
        int peak;
        double f_zero, level;
    };
    std::vector<Row> rows(points.size() * peaks.size());
    std::string error;

#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < (int)points.size(); ++i) {
        try {
            EnvironmentState env = sc.environment;
            double frac = points.size() > 1 ? (double)i / (points.size() - 1) : 0.0;
            if (vary_name == "temperature")
                env.temperature_c = points[i];
            else
                env.field_mt = points[i];
            // linear chuck drift across the sweep, -drift..+drift
            env.temperature_c += drift_c * (2.0 * frac - 1.0);

            std::optional<NoiseSpec> noise = sc.noise;
            if (noise)
                noise->seed = noise->seed * 1000003 + i; // per-point stream
            Spectrum s =
                synthesize_s11(effective_geometry(sc), sc.physics, env, sc.grid, noise);
            Scenario point_sc = sc;
            point_sc.environment = env;
            for (std::size_t pi = 0; pi < peaks.size(); ++pi) {
                PeakReading r = read_peak(point_sc, s, peaks[pi]);
                rows[i * peaks.size() + pi] = {env.temperature_c, env.field_mt,
                                               vary_name == "temperature" ? points[i]
                                                                          : sc.environment.temperature_c,
                                               peaks[pi], r.f_zero_hz, r.level_db};
            }
        } catch (const std::exception& e) {
#pragma omp critical
            error = e.what();
        }
    }
    if (!error.empty())
        throw std::runtime_error(error);

    CsvTable t;
    t.header = {"temperature_c", "field_mt", "peak_id", "f_zero_hz", "level_db", "set_temperature_c"};
    for (auto& r : rows)
        t.rows.push_back({r.t, r.h, (double)r.peak, r.f_zero, r.level, r.set_t});
    if (out_csv.empty()) {
        write_csv(std::cout, t, provenance(sc));
    } else {
        std::ofstream out(out_csv);
        write_csv(out, t, provenance(sc));
    }
    return 0;
}

std::vector<SweepRow> rows_for_peak(const CsvTable& t, int peak)
{
    int ti = -1, hi = -1, pi = -1, fi = -1;
    for (std::size_t i = 0; i < t.header.size(); ++i) {
        if (t.header[i] == "temperature_c")
            ti = (int)i;
        else if (t.header[i] == "field_mt")
            hi = (int)i;
        else if (t.header[i] == "peak_id")
            pi = (int)i;
        else if (t.header[i] == "f_zero_hz")
            fi = (int)i;
    }
    if (ti < 0 || hi < 0 || pi < 0 || fi < 0)
        throw std::invalid_argument(
            "input CSV must have columns temperature_c, field_mt, peak_id, f_zero_hz");
    std::vector<SweepRow> out;
    for (auto& row : t.rows)
        if ((int)std::lround(row[pi]) == peak)
            out.push_back({row[ti], row[hi], peak, row[fi]});
    return out;
}

int cmd_calibrate(const std::string& in_csv, const std::string& mode, int peak,
                  const std::string& window, const std::string& shifts_out)
{
    std::ifstream in(in_csv);
    if (!in)
        throw std::invalid_argument("cannot open '" + in_csv + "'");
    CsvTable t = read_csv(in);

    CsvTable result;
    CsvTable shifts;
    shifts.header = {"temperature_c", "field_mt", "peak_id", "shift_ppm"};

    if (mode == "tcf") {
        result.header = {"peak_id", "tcf_ppm_per_c", "r_squared", "residual_rms_ppm"};
        std::vector<int> which = peak > 0 ? std::vector<int>{peak} : std::vector<int>{1, 2};
        for (int p : which) {
            auto rows = rows_for_peak(t, p);
            if (rows.empty())
                continue;
            TcfFit fit = fit_tcf(rows);
            result.rows.push_back({(double)p, fit.tcf_ppm_per_c, fit.fit.r_squared, fit.fit.residual_rms});
            double f0 = rows.front().f_zero_hz;
            for (auto& r : rows)
                shifts.rows.push_back(
                    {r.temperature_c, r.field_mt, (double)p, relative_shift(r.f_zero_hz, f0)});
        }
    } else if (mode == "magnetic") {
        double h_lo = -0.19, h_hi = 0.69;
        if (!window.empty()) {
            auto colon = window.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("--window expects lo:hi");
            h_lo = std::stod(window.substr(0, colon));
            h_hi = std::stod(window.substr(colon + 1));
        }
        result.header = {"peak_id", "slope_ppm_per_mt", "hz_per_ut", "f_reference_hz", "r_squared"};
        std::vector<int> which = peak > 0 ? std::vector<int>{peak} : std::vector<int>{1, 2};
        for (int p : which) {
            auto rows = rows_for_peak(t, p);
            if (rows.empty())
                continue;
            MagneticFit fit = fit_magnetic_sensitivity(rows, h_lo, h_hi);
            result.rows.push_back(
                {(double)p, fit.slope_ppm_per_mt, fit.hz_per_ut, fit.f_reference_hz, fit.fit.r_squared});
            double f0 = rows.front().f_zero_hz;
            for (auto& r : rows)
                shifts.rows.push_back(
                    {r.temperature_c, r.field_mt, (double)p, relative_shift(r.f_zero_hz, f0)});
        }
    } else {
        throw std::invalid_argument("--mode expects 'tcf' or 'magnetic'");
    }

    write_csv(std::cout, result);
    if (!shifts_out.empty()) {
        std::ofstream out(shifts_out);
        write_csv(out, shifts);
    }
    return 0;
}

int cmd_compensate(const std::string& in_csv, double tcf1, double tcf2, const std::string& out_csv)
{
    std::ifstream in(in_csv);
    if (!in)
        throw std::invalid_argument("cannot open '" + in_csv + "'");
    CsvTable t = read_csv(in);

    int set_col = -1;
    for (std::size_t i = 0; i < t.header.size(); ++i)
        if (t.header[i] == "set_temperature_c")
            set_col = (int)i;
    int pid_col = -1;
    for (std::size_t i = 0; i < t.header.size(); ++i)
        if (t.header[i] == "peak_id")
            pid_col = (int)i;
    if (pid_col < 0)
        throw std::invalid_argument("input CSV must have a peak_id column");

    // group rows by the temperature setpoint, preserving encounter order
    std::vector<double> group_keys;
    std::map<double, CsvTable> groups;
    for (auto& row : t.rows) {
        double key = set_col >= 0 ? row[set_col] : 0.0;
        if (!groups.count(key)) {
            group_keys.push_back(key);
            groups[key].header = t.header;
        }
        groups[key].rows.push_back(row);
    }
    std::sort(group_keys.begin(), group_keys.end());

    // shared reference: first point of the first group, per peak
    std::optional<double> f10, f20;
    CsvTable out_table;
    out_table.header = {"temperature_c", "field_mt", "shift_ppm", "shift_ppm_compensated"};
    bool first_group = true;
    for (double key : group_keys) {
        auto p1 = rows_for_peak(groups[key], 1);
        auto p2 = rows_for_peak(groups[key], 2);
        if (first_group && !p1.empty() && !p2.empty()) {
            f10 = p1.front().f_zero_hz;
            f20 = p2.front().f_zero_hz;
            first_group = false;
        }
        auto comp = compensate_sweep(p1, p2, tcf1, tcf2, f10, f20);
        for (auto& c : comp)
            out_table.rows.push_back({key, c.field_mt, c.shift2_ppm, c.shift_compensated_ppm});
    }

    if (out_csv.empty()) {
        write_csv(std::cout, out_table);
    } else {
        std::ofstream out(out_csv);
        write_csv(out, out_table);
    }
    return 0;
}

int cmd_decode(const std::string& scenario_path, const GlobalOpts& g, const std::string& in_s1p,
               double threshold_db)
{
    Scenario sc = load_scenario_opts(scenario_path, g);
    if (!sc.tag)
        throw std::invalid_argument("scenario has no tag template ('tag' section)");
    Spectrum s = acquire_spectrum(sc, in_s1p);
    TimeResponse tr = to_time_domain(s, sc.interrogation.zero_pad_factor);
    auto occupied = decode(tr, *sc.tag, threshold_db);
    std::cout << occupancy_hex(occupied, sc.tag->slot_count) << "\n";
    return 0;
}

int cmd_disperse(const std::string& scenario_path, const GlobalOpts& g, const std::string& vary_name,
                 const std::string& vary_range, int layer_index, const std::string& out_csv)
{
    Scenario sc = load_scenario_opts(scenario_path, g);
    CsvTable t;
    t.header = {"control", "mode_index", "phase_velocity_mps", "residual"};

    std::vector<double> points = parse_range(vary_range);
    for (double c : points) {
        LayerStack stack = sc.stack;
        double wavelength = sc.geometry.wavelength;
        if (vary_name == "wavelength") {
            wavelength = c;
        } else if (vary_name == "thickness") {
            if (layer_index < 0 || layer_index >= (int)stack.layers.size())
                throw std::invalid_argument("--layer index out of range");
            stack.layers[layer_index].thickness = c;
        } else {
            throw std::invalid_argument("--vary expects 'wavelength' or 'thickness'");
        }
        for (auto& m : solve_modes_at_wavelength(stack, wavelength))
            t.rows.push_back({c, (double)m.mode_index, m.phase_velocity, m.residual});
    }
    if (out_csv.empty()) {
        write_csv(std::cout, t);
    } else {
        std::ofstream out(out_csv);
        write_csv(out, t);
    }
    return 0;
}

int cmd_magcurve(const std::string& scenario_path, const GlobalOpts& g, const std::string& range,
                 const std::string& out_csv)
{
    Scenario sc = load_scenario_opts(scenario_path, g);
    CsvTable t;
    t.header = {"field_mt", "shift_ppm"};
    for (double h : parse_range(range))
        t.rows.push_back({h, fractional_shift(sc.physics.magnetoelastic, h)});
    if (out_csv.empty()) {
        write_csv(std::cout, t);
    } else {
        std::ofstream out(out_csv);
        write_csv(out, t);
    }
    return 0;
}

int cmd_plot(const std::string& kind, const std::string& in_csv, const std::string& out_svg,
             const std::string& title)
{
    std::ifstream in(in_csv);
    if (!in)
        throw std::invalid_argument("cannot open '" + in_csv + "'");
    CsvTable t = read_csv(in);
    PlotSpec spec;
    spec.kind = parse_plot_kind(kind);
    spec.title = title;
    write_file(out_svg, emit_plot(spec, t));
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"MSAW reflective delay-line sensor simulator and reader chain"};
    app.require_subcommand(1);

    GlobalOpts g;
    std::uint64_t seed_val = 0;
    double snr_val = 0.0;
    auto* seed_opt = app.add_option("--seed", seed_val, "noise seed override");
    auto* snr_opt = app.add_option("--snr-db", snr_val, "enable/override additive noise SNR (dB)");
    bool lenient = false;
    app.add_flag("--strict-config", g.strict_config, "reject unknown scenario keys (default)");
    app.add_flag("--lenient-config", lenient, "warn on unknown scenario keys instead of failing");

    std::string scenario_path, in_path, out_path, csv_path, time_csv_path;
    std::vector<int> peaks{1, 2};

    auto* sim = app.add_subcommand("simulate", "synthesize an S11 record");
    sim->add_option("--scenario", scenario_path, "scenario JSON file");
    sim->add_option("--out", out_path, "Touchstone .s1p output");
    sim->add_option("--csv", csv_path, "spectrum CSV output");
    sim->add_option("--time-csv", time_csv_path, "time-envelope CSV output");

    auto* inter = app.add_subcommand("interrogate", "track zero-phase frequencies of gated peaks");
    inter->add_option("--scenario", scenario_path, "scenario JSON file");
    inter->add_option("--in", in_path, "input .s1p (default: simulate the scenario)");
    inter->add_option("--peaks", peaks, "peak indices in time order");
    inter->add_option("--out", out_path, "output CSV (default stdout)");

    std::string vary_name, vary_range;
    double drift_c = 0.0;
    auto* sweep = app.add_subcommand("sweep", "interrogate across an environment sweep");
    sweep->add_option("--scenario", scenario_path, "scenario JSON file");
    sweep->add_option("--vary", vary_name, "'temperature' or 'field'")->required();
    sweep->add_option("--range", vary_range, "start:stop:step")->required();
    sweep->add_option("--peaks", peaks, "peak indices in time order");
    sweep->add_option("--drift", drift_c, "linear chuck drift amplitude across the sweep (degC)");
    sweep->add_option("--out", out_path, "output CSV (default stdout)");

    std::string mode = "tcf", window, shifts_out;
    int peak = 0;
    auto* cal = app.add_subcommand("calibrate", "fit TCF or magnetic sensitivity from a sweep CSV");
    cal->add_option("--in", in_path, "sweep CSV")->required();
    cal->add_option("--mode", mode, "'tcf' or 'magnetic'");
    cal->add_option("--peak", peak, "restrict to one peak id");
    cal->add_option("--window", window, "magnetic linear window lo:hi (mT)");
    cal->add_option("--shifts-out", shifts_out, "write relative shifts CSV for plotting");

    double tcf1 = -67.7, tcf2 = -66.2;
    auto* comp = app.add_subcommand("compensate", "apply differential temperature compensation");
    comp->add_option("--in", in_path, "sweep CSV with both peaks")->required();
    comp->add_option("--tcf1", tcf1, "peak-1 TCF (ppm/degC)");
    comp->add_option("--tcf2", tcf2, "peak-2 TCF (ppm/degC)");
    comp->add_option("--out", out_path, "output CSV (default stdout)");

    double threshold_db = -12.0;
    auto* dec = app.add_subcommand("decode", "decode the tag occupancy to a hex ID");
    dec->add_option("--scenario", scenario_path, "scenario JSON file (tag template required)");
    dec->add_option("--in", in_path, "input .s1p (default: simulate the scenario)");
    dec->add_option("--threshold-db", threshold_db, "slot threshold relative to the strongest slot");

    int layer_index = 0;
    auto* disp = app.add_subcommand("disperse", "sweep the guided-mode solver");
    disp->add_option("--scenario", scenario_path, "scenario JSON file");
    disp->add_option("--vary", vary_name, "'wavelength' or 'thickness'")->required();
    disp->add_option("--range", vary_range, "start:stop:step (m)")->required();
    disp->add_option("--layer", layer_index, "layer index for thickness sweeps");
    disp->add_option("--out", out_path, "output CSV (default stdout)");

    std::string mag_range = "-4:4:0.1";
    auto* mag = app.add_subcommand("magcurve", "evaluate the magnetoelastic response");
    mag->add_option("--scenario", scenario_path, "scenario JSON file");
    mag->add_option("--range", mag_range, "field range start:stop:step (mT)");
    mag->add_option("--out", out_path, "output CSV (default stdout)");

    std::string kind, title;
    auto* plot = app.add_subcommand("plot", "render a CSV as an SVG chart");
    plot->add_option("--kind", kind, "plot kind")->required();
    plot->add_option("--in", in_path, "input CSV")->required();
    plot->add_option("--out", out_path, "output SVG")->required();
    plot->add_option("--title", title, "chart title");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (*seed_opt)
        g.seed = seed_val;
    if (*snr_opt)
        g.snr_db = snr_val;
    if (lenient)
        g.strict_config = false;

    try {
        if (sim->parsed())
            return cmd_simulate(scenario_path, g, out_path, csv_path, time_csv_path);
        if (inter->parsed())
            return cmd_interrogate(scenario_path, g, in_path, peaks, out_path);
        if (sweep->parsed())
            return cmd_sweep(scenario_path, g, vary_name, vary_range, peaks, out_path, drift_c);
        if (cal->parsed())
            return cmd_calibrate(in_path, mode, peak, window, shifts_out);
        if (comp->parsed())
            return cmd_compensate(in_path, tcf1, tcf2, out_path);
        if (dec->parsed())
            return cmd_decode(scenario_path, g, in_path, threshold_db);
        if (disp->parsed())
            return cmd_disperse(scenario_path, g, vary_name, vary_range, layer_index, out_path);
        if (mag->parsed())
            return cmd_magcurve(scenario_path, g, mag_range, out_path);
        if (plot->parsed())
            return cmd_plot(kind, in_path, out_path, title);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
