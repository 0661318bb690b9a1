#include "msaw/magnetics.hpp"

#include <stdexcept>

namespace msaw {
namespace {

// Smoothly clamped field: identity inside the window, constant outside, with
// quadratic C1 blends of half-width w at the corners (hard clamp when w=0).
double smooth_clamp(double h, double lo, double hi, double w)
{
    if (w > 0.0) {
        if (h > lo - w && h < lo + w) {
            double d = h - (lo - w);
            return lo + d * d / (4.0 * w);
        }
        if (h > hi - w && h < hi + w) {
            double d = (hi + w) - h;
            return hi - d * d / (4.0 * w);
        }
    }
    if (h < lo)
        return lo;
    if (h > hi)
        return hi;
    return h;
}

} // namespace

void MagnetoelasticModel::validate() const
{
    if (!(h_low_mt < h_high_mt))
        throw std::invalid_argument("magnetoelastic model: window bounds must satisfy h_low < h_high");
    if (smoothing_mt < 0.0)
        throw std::invalid_argument("magnetoelastic model: smoothing width must be >= 0");
    if (2.0 * smoothing_mt > h_high_mt - h_low_mt)
        throw std::invalid_argument("magnetoelastic model: smoothing width exceeds the linear window");
}

double fractional_shift(const MagnetoelasticModel& model, double h_mt)
{
    model.validate();
    double c = smooth_clamp(h_mt, model.h_low_mt, model.h_high_mt, model.smoothing_mt);
    double c0 = smooth_clamp(model.h_ref_mt, model.h_low_mt, model.h_high_mt, model.smoothing_mt);
    return model.slope_ppm_per_mt * (c - c0);
}

std::vector<double> field_sweep(const MagnetoelasticModel& model, const std::vector<double>& h_mt)
{
    std::vector<double> out;
    out.reserve(h_mt.size());
    for (double h : h_mt)
        out.push_back(fractional_shift(model, h));
    return out;
}

} // namespace msaw
