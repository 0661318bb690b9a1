#include "msaw/calib.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace msaw {

double relative_shift(double f_hz, double f0_hz)
{
    if (f0_hz <= 0.0)
        throw std::invalid_argument("relative_shift: reference frequency must be > 0");
    return (f_hz - f0_hz) / f0_hz * 1e6;
}

LinearFit ols(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("ols: need at least 2 paired samples");
    std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0)
        throw std::invalid_argument("ols: degenerate fit, all abscissae identical");

    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = y[i] - (fit.slope * x[i] + fit.intercept);
        ss_res += r * r;
    }
    fit.residual_rms = std::sqrt(ss_res / n);
    fit.r_squared = (syy == 0.0) ? 1.0 : 1.0 - ss_res / syy;
    return fit;
}

TcfFit fit_tcf(const std::vector<SweepRow>& rows)
{
    if (rows.size() < 2)
        throw std::invalid_argument("fit_tcf: need at least 2 rows");
    double f0 = rows.front().f_zero_hz;
    std::vector<double> t, shift;
    for (auto& r : rows) {
        t.push_back(r.temperature_c);
        shift.push_back(relative_shift(r.f_zero_hz, f0));
    }
    TcfFit out;
    out.fit = ols(t, shift);
    out.tcf_ppm_per_c = out.fit.slope;
    return out;
}

MagneticFit fit_magnetic_sensitivity(const std::vector<SweepRow>& rows, double h_low_mt, double h_high_mt)
{
    if (rows.empty())
        throw std::invalid_argument("fit_magnetic_sensitivity: empty sweep");
    double f0 = rows.front().f_zero_hz;
    std::vector<double> h, shift;
    for (auto& r : rows) {
        if (r.field_mt >= h_low_mt && r.field_mt <= h_high_mt) {
            h.push_back(r.field_mt);
            shift.push_back(relative_shift(r.f_zero_hz, f0));
        }
    }
    if (h.size() < 2)
        throw std::invalid_argument("fit_magnetic_sensitivity: fewer than 2 samples inside the window");

    MagneticFit out;
    // All in-window samples at the same field: slope 0 by convention only if
    // the shifts agree; otherwise the fit is degenerate.
    bool constant_h = std::all_of(h.begin(), h.end(), [&](double v) { return v == h.front(); });
    if (constant_h) {
        out.fit = LinearFit{};
        out.fit.intercept = shift.front();
    } else {
        out.fit = ols(h, shift);
    }
    out.slope_ppm_per_mt = out.fit.slope;
    out.f_reference_hz = f0;
    out.hz_per_ut = out.fit.slope * 1e-9 * f0;
    return out;
}

double compensate(double shift2_ppm, double shift1_ppm, double tcf1_ppm_per_c, double tcf2_ppm_per_c)
{
    if (tcf1_ppm_per_c == 0.0)
        throw std::invalid_argument("compensate: cannot ratio against zero-TCF reference");
    return shift2_ppm - (tcf2_ppm_per_c / tcf1_ppm_per_c) * shift1_ppm;
}

std::vector<CompensatedPoint> compensate_sweep(const std::vector<SweepRow>& peak1,
                                               const std::vector<SweepRow>& peak2,
                                               double tcf1_ppm_per_c, double tcf2_ppm_per_c,
                                               std::optional<double> f10_ref_hz,
                                               std::optional<double> f20_ref_hz)
{
    if (peak1.empty() || peak2.empty())
        throw std::invalid_argument("compensate_sweep: empty peak record");
    if (peak1.size() != peak2.size()) {
        std::string msg = "compensate_sweep: unpairable rows, missing indices";
        std::size_t lo = std::min(peak1.size(), peak2.size());
        std::size_t hi = std::max(peak1.size(), peak2.size());
        for (std::size_t i = lo; i < hi; ++i)
            msg += " " + std::to_string(i);
        throw std::invalid_argument(msg);
    }
    for (std::size_t i = 0; i < peak1.size(); ++i) {
        if (peak1[i].field_mt != peak2[i].field_mt ||
            peak1[i].temperature_c != peak2[i].temperature_c)
            throw std::invalid_argument("compensate_sweep: rows at index " + std::to_string(i) +
                                        " disagree on (temperature, field)");
    }

    double f10 = f10_ref_hz.value_or(peak1.front().f_zero_hz);
    double f20 = f20_ref_hz.value_or(peak2.front().f_zero_hz);

    std::vector<CompensatedPoint> out;
    out.reserve(peak1.size());
    for (std::size_t i = 0; i < peak1.size(); ++i) {
        CompensatedPoint p;
        p.field_mt = peak2[i].field_mt;
        p.shift1_ppm = relative_shift(peak1[i].f_zero_hz, f10);
        p.shift2_ppm = relative_shift(peak2[i].f_zero_hz, f20);
        p.shift_compensated_ppm = compensate(p.shift2_ppm, p.shift1_ppm, tcf1_ppm_per_c, tcf2_ppm_per_c);
        out.push_back(p);
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const CompensatedPoint& a, const CompensatedPoint& b) { return a.field_mt < b.field_mt; });
    return out;
}

} // namespace msaw
