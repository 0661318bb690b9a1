#include "msaw/pipeline.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>

namespace msaw {
namespace {

std::size_t padded_length(int n, int factor)
{
    std::size_t target = (std::size_t)n * factor;
    std::size_t len = 1;
    while (len < target)
        len <<= 1;
    return len;
}

void run_fft(std::vector<std::complex<double>>& data, int sign)
{
    // FFTW planning is not thread-safe; execution on the plan's own buffer is.
    static std::mutex plan_mutex;
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        plan = fftw_plan_dft_1d((int)data.size(), reinterpret_cast<fftw_complex*>(data.data()),
                                reinterpret_cast<fftw_complex*>(data.data()), sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    std::lock_guard<std::mutex> lock(plan_mutex);
    fftw_destroy_plan(plan);
}

double gate_window_value(const Gate& gate, double t)
{
    double u = std::abs(t - gate.center_s) / (gate.width_s / 2.0);
    if (u > 1.0)
        return 0.0;
    if (gate.window == GateWindow::rectangular)
        return 1.0;
    double a = std::clamp(gate.taper_fraction, 0.0, 1.0);
    if (a == 0.0 || u <= 1.0 - a)
        return 1.0;
    return 0.5 * (1.0 + std::cos(M_PI * (u - (1.0 - a)) / a));
}

// Contiguous run of samples within threshold_db of the record maximum.
std::pair<int, int> analysis_band(const Spectrum& s, double threshold_db)
{
    int i_max = 0;
    double peak = 0.0;
    for (int i = 0; i < s.n_points; ++i) {
        double m = std::abs(s.values[i]);
        if (m > peak) {
            peak = m;
            i_max = i;
        }
    }
    double floor = peak * std::pow(10.0, threshold_db / 20.0);
    int lo = i_max, hi = i_max;
    while (lo > 0 && std::abs(s.values[lo - 1]) >= floor)
        --lo;
    while (hi + 1 < s.n_points && std::abs(s.values[hi + 1]) >= floor)
        ++hi;
    return {lo, hi};
}

std::vector<double> unwrap_range(const Spectrum& s, int lo, int hi)
{
    std::vector<double> phase(hi - lo + 1);
    double prev = std::arg(s.values[lo]);
    phase[0] = prev;
    double offset = 0.0;
    for (int i = lo + 1; i <= hi; ++i) {
        double cur = std::arg(s.values[i]);
        double d = cur - prev;
        // map the successive difference into (-pi, pi]
        if (d > M_PI)
            offset -= 2.0 * M_PI * std::ceil((d - M_PI) / (2.0 * M_PI));
        else if (d <= -M_PI)
            offset += 2.0 * M_PI * std::ceil((-d - M_PI) / (2.0 * M_PI));
        phase[i - lo] = cur + offset;
        prev = cur;
    }
    return phase;
}

} // namespace

TimeResponse to_time_domain(const Spectrum& spectrum, int zero_pad_factor)
{
    if (spectrum.n_points < 2 || (int)spectrum.values.size() != spectrum.n_points)
        throw std::invalid_argument("to_time_domain: malformed spectrum");
    if (zero_pad_factor < 1)
        throw std::invalid_argument("to_time_domain: zero_pad_factor must be >= 1");

    std::size_t npad = padded_length(spectrum.n_points, zero_pad_factor);
    std::vector<std::complex<double>> buf(npad, 0.0);
    std::copy(spectrum.values.begin(), spectrum.values.end(), buf.begin());
    run_fft(buf, FFTW_BACKWARD);

    TimeResponse tr;
    tr.t_start = 0.0;
    tr.dt = 1.0 / (npad * spectrum.df());
    tr.f_start = spectrum.f_start;
    tr.f_stop = spectrum.f_stop;
    tr.source_points = spectrum.n_points;
    tr.values.resize(npad);
    double scale = 1.0 / spectrum.n_points;
    for (std::size_t i = 0; i < npad; ++i)
        tr.values[i] = buf[i] * scale;
    return tr;
}

PeakList detect_peaks(const TimeResponse& tr, int count, double min_separation_s, double level_reference)
{
    if (count < 1)
        throw std::invalid_argument("detect_peaks: count must be >= 1");
    if (level_reference <= 0.0)
        throw std::invalid_argument("detect_peaks: level_reference must be > 0");

    struct Candidate {
        int index;
        double level;
    };
    std::vector<Candidate> cands;
    int n = (int)tr.values.size();
    for (int i = 1; i + 1 < n; ++i) {
        double m = std::abs(tr.values[i]);
        if (m > 0.0 && m > std::abs(tr.values[i - 1]) && m >= std::abs(tr.values[i + 1]))
            cands.push_back({i, m});
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.level != b.level)
            return a.level > b.level;
        return a.index < b.index;
    });

    PeakList out;
    std::vector<int> taken;
    for (auto& c : cands) {
        if ((int)taken.size() >= count)
            break;
        bool suppressed = false;
        for (int t : taken)
            if (std::abs(t - c.index) * tr.dt < min_separation_s)
                suppressed = true;
        if (suppressed)
            continue;
        taken.push_back(c.index);
        out.peaks.push_back({tr.time(c.index), 20.0 * std::log10(c.level / level_reference)});
    }
    out.fewer_than_requested = (int)out.peaks.size() < count;
    return out;
}

double unit_echo_envelope_peak(const DeviceGeometry& geometry, const Spectrum& spectrum, double f_center)
{
    double acc = 0.0;
    for (int i = 0; i < spectrum.n_points; ++i)
        acc += idt_band_shape(geometry, spectrum.frequency(i), f_center);
    return acc / spectrum.n_points;
}

Spectrum gate_and_return(const Spectrum& spectrum, const Gate& gate, int zero_pad_factor)
{
    if (gate.width_s <= 0.0)
        throw std::invalid_argument("gate_and_return: gate width must be > 0");
    TimeResponse tr = to_time_domain(spectrum, zero_pad_factor);
    double record_end = tr.dt * tr.values.size();
    if (gate.center_s - gate.width_s / 2.0 < tr.t_start || gate.center_s + gate.width_s / 2.0 > record_end)
        throw std::invalid_argument("gate_and_return: gate lies outside the time record");

    std::vector<std::complex<double>> buf(tr.values.size());
    for (std::size_t i = 0; i < buf.size(); ++i)
        buf[i] = tr.values[i] * gate_window_value(gate, tr.time((int)i));
    run_fft(buf, FFTW_FORWARD);

    Spectrum out;
    out.f_start = spectrum.f_start;
    out.f_stop = spectrum.f_stop;
    out.n_points = spectrum.n_points;
    out.values.resize(spectrum.n_points);
    double scale = (double)spectrum.n_points / (double)buf.size();
    for (int i = 0; i < spectrum.n_points; ++i)
        out.values[i] = buf[i] * scale;
    return out;
}

std::vector<double> unwrap_phase(const Spectrum& spectrum, double band_threshold_db)
{
    if (spectrum.n_points < 2)
        throw std::invalid_argument("unwrap_phase: need at least 2 samples");
    auto [lo, hi] = analysis_band(spectrum, band_threshold_db);
    for (int i = lo; i <= hi; ++i) {
        if (std::abs(spectrum.values[i]) == 0.0)
            throw std::runtime_error("unwrap_phase: zero-magnitude sample inside analysis band at " +
                                     std::to_string(spectrum.frequency(i)) + " Hz");
    }
    return unwrap_range(spectrum, 0, spectrum.n_points - 1);
}

TrackedFrequency track_zero_phase(const Spectrum& spectrum, double f_lo, double f_hi)
{
    if (!(f_lo < f_hi))
        throw std::invalid_argument("track_zero_phase: need f_lo < f_hi");
    double df = spectrum.df();
    int lo = std::max(0, (int)std::ceil((f_lo - spectrum.f_start) / df));
    int hi = std::min(spectrum.n_points - 1, (int)std::floor((f_hi - spectrum.f_start) / df));
    if (hi - lo < 1)
        throw std::invalid_argument("track_zero_phase: search band contains fewer than 2 grid points");

    int i_max = lo;
    double peak = 0.0;
    for (int i = lo; i <= hi; ++i) {
        double m = std::abs(spectrum.values[i]);
        if (m > peak) {
            peak = m;
            i_max = i;
        }
    }
    if (peak == 0.0)
        throw std::runtime_error("track_zero_phase: search band has zero amplitude");

    std::vector<double> phase = unwrap_range(spectrum, lo, hi);
    double reduction = 2.0 * M_PI * std::round(phase[i_max - lo] / (2.0 * M_PI));
    for (auto& p : phase)
        p -= reduction;

    double best_f = 0.0, best_slope = 0.0, best_dist = -1.0;
    double f_max = spectrum.frequency(i_max);
    for (int i = lo; i < hi; ++i) {
        double a = phase[i - lo], b = phase[i + 1 - lo];
        if (a == 0.0 || a * b < 0.0) {
            double frac = (a == b) ? 0.0 : a / (a - b);
            double fz = spectrum.frequency(i) + frac * df;
            double dist = std::abs(fz - f_max);
            if (best_dist < 0.0 || dist < best_dist - 1e-12 ||
                (std::abs(dist - best_dist) <= 1e-12 && fz < best_f)) {
                best_dist = dist;
                best_f = fz;
                best_slope = (b - a) / df;
            }
        }
    }
    if (best_dist < 0.0)
        throw std::runtime_error("track_zero_phase: no zero crossing of the unwrapped phase in band");
    return {best_f, best_slope, 0};
}

PeakReading interrogate_peak(const Spectrum& spectrum, int peak_index,
                             const InterrogationSettings& settings, double level_reference,
                             double gate_center_s)
{
    TimeResponse tr = to_time_domain(spectrum, settings.zero_pad_factor);
    PeakList peaks = detect_peaks(tr, settings.peak_count, settings.min_separation_s, level_reference);
    if (peaks.peaks.empty())
        throw std::runtime_error("interrogate_peak: no peaks detected");

    std::vector<DetectedPeak> by_time = peaks.peaks;
    std::sort(by_time.begin(), by_time.end(),
              [](const DetectedPeak& a, const DetectedPeak& b) { return a.time_s < b.time_s; });
    if (peak_index < 1 || peak_index > (int)by_time.size())
        throw std::runtime_error("interrogate_peak: peak index " + std::to_string(peak_index) +
                                 " out of range (detected " + std::to_string(by_time.size()) + ")");
    const DetectedPeak& sel = by_time[peak_index - 1];

    double width = settings.gate_width_s;
    if (width <= 0.0) {
        double spacing = std::numeric_limits<double>::max();
        for (std::size_t i = 1; i < by_time.size(); ++i)
            spacing = std::min(spacing, by_time[i].time_s - by_time[i - 1].time_s);
        if (by_time.size() < 2)
            spacing = 4.0 * settings.min_separation_s;
        width = spacing / 2.0;
    }

    Gate gate;
    gate.center_s = gate_center_s > 0.0 ? gate_center_s : sel.time_s;
    gate.width_s = width;
    gate.window = settings.gate_window;
    gate.taper_fraction = settings.taper_fraction;

    Spectrum gated = gate_and_return(spectrum, gate, settings.zero_pad_factor);

    int g_max = 0;
    double g_peak = 0.0;
    for (int i = 0; i < gated.n_points; ++i) {
        double m = std::abs(gated.values[i]);
        if (m > g_peak) {
            g_peak = m;
            g_max = i;
        }
    }
    double fc = gated.frequency(g_max);
    double f_lo = std::max(gated.f_start, fc - settings.search_halfwidth_hz);
    double f_hi = std::min(gated.f_stop, fc + settings.search_halfwidth_hz);
    TrackedFrequency tracked = track_zero_phase(gated, f_lo, f_hi);

    PeakReading out;
    out.peak_id = peak_index;
    out.gate_center_s = gate.center_s;
    out.f_zero_hz = tracked.f_zero_hz;
    out.level_db = sel.level_db;
    out.phase_slope_rad_per_hz = tracked.phase_slope_rad_per_hz;
    return out;
}

} // namespace msaw
