#include "msaw/dispersion.hpp"

#include <algorithm>
#include <cmath>

namespace msaw {
namespace {

double max_layer_velocity(const LayerStack& stack)
{
    double vmax = 0.0;
    for (auto& l : stack.layers)
        vmax = std::max(vmax, shear_velocity(l.material));
    return vmax;
}

// Propagates the (displacement, traction) state vector from the substrate
// surface through the layer stack at wavenumber k and trial velocity v.
// Returns the surface traction; a guided mode has zero traction at the free
// surface. The state is renormalized after every layer so the value stays
// bounded while keeping its sign.
double surface_traction(const LayerStack& stack, double k, double v)
{
    double vs = shear_velocity(stack.substrate);
    double mus = *stack.substrate.shear_stiffness;
    double b = k * std::sqrt(1.0 - v * v / (vs * vs));

    double u = 1.0;
    double t = mus * b;
    for (auto& l : stack.layers) {
        double vl = shear_velocity(l.material);
        double mu = *l.material.shear_stiffness;
        double h = l.thickness;
        double u2, t2;
        if (v > vl) {
            double q = k * std::sqrt(v * v / (vl * vl) - 1.0);
            double c = std::cos(q * h), s = std::sin(q * h);
            u2 = c * u + s / (mu * q) * t;
            t2 = -mu * q * s * u + c * t;
        } else if (v < vl) {
            double q = k * std::sqrt(1.0 - v * v / (vl * vl));
            double c = std::cosh(q * h), s = std::sinh(q * h);
            u2 = c * u + s / (mu * q) * t;
            t2 = mu * q * s * u + c * t;
        } else { // v == vl: uniform shear, zero transverse wavenumber
            u2 = u + h / mu * t;
            t2 = t;
        }
        double n = std::max(std::abs(u2), std::abs(t2));
        if (n > 0.0) {
            u2 /= n;
            t2 /= n;
        }
        u = u2;
        t = t2;
    }
    return t;
}

std::vector<ModeSolution> scan_and_bisect(const LayerStack& stack, bool fixed_wavelength,
                                          double f_or_lambda, double v_lo, double v_hi,
                                          int scan_points, double rel_tol, int max_modes)
{
    auto det = [&](double v) {
        double k = fixed_wavelength ? 2.0 * M_PI / f_or_lambda : 2.0 * M_PI * f_or_lambda / v;
        return surface_traction(stack, k, v);
    };

    std::vector<ModeSolution> out;
    if (!(v_lo < v_hi) || scan_points < 2)
        throw std::invalid_argument("invalid bracket: need v_min < v_max and at least 2 scan points");

    double dv = (v_hi - v_lo) / scan_points;
    double prev_v = v_lo;
    double prev_d = det(prev_v);
    for (int i = 1; i <= scan_points && (int)out.size() < max_modes; ++i) {
        double cur_v = (i == scan_points) ? v_hi : v_lo + i * dv;
        double cur_d = det(cur_v);
        if (prev_d == 0.0) {
            out.push_back({prev_v, 0, 0.0});
        } else if (prev_d * cur_d < 0.0) {
            double a = prev_v, fa = prev_d;
            double b = cur_v, fb = cur_d;
            while (b - a > rel_tol * std::abs(b)) {
                double m = 0.5 * (a + b);
                double fm = det(m);
                if (fm == 0.0) {
                    a = b = m;
                    fa = fb = 0.0;
                    break;
                }
                if (fa * fm < 0.0) {
                    b = m;
                    fb = fm;
                } else {
                    a = m;
                    fa = fm;
                }
            }
            double root = 0.5 * (a + b);
            out.push_back({root, 0, det(root)});
        }
        prev_v = cur_v;
        prev_d = cur_d;
    }
    std::sort(out.begin(), out.end(),
              [](const ModeSolution& x, const ModeSolution& y) { return x.phase_velocity < y.phase_velocity; });
    for (int i = 0; i < (int)out.size(); ++i)
        out[i].mode_index = i;
    return out;
}

} // namespace

double determinant(const LayerStack& stack, double frequency, double trial_velocity)
{
    validate(stack);
    double k = 2.0 * M_PI * frequency / trial_velocity;
    double vs = shear_velocity(stack.substrate);
    double vmin = max_layer_velocity(stack);
    if (!(trial_velocity > vmin && trial_velocity < vs))
        throw std::invalid_argument("evanescence violated: trial velocity must lie strictly between "
                                    "the fastest layer and the substrate shear velocities");
    return surface_traction(stack, k, trial_velocity);
}

std::vector<ModeSolution> solve_modes(const DispersionProblem& problem, int max_modes)
{
    validate(problem.stack);
    if (max_modes < 1)
        throw std::invalid_argument("max_modes must be >= 1");
    double vs = shear_velocity(problem.stack.substrate);
    double vl = max_layer_velocity(problem.stack);
    if (problem.stack.layers.empty() || vl >= vs)
        return {}; // no slow guiding layer, no Love branch
    const double eps = 1e-9;
    double lo = std::max(problem.v_min, vl * (1.0 + eps));
    double hi = std::min(problem.v_max > 0.0 ? problem.v_max : vs, vs * (1.0 - eps));
    if (!(lo < hi))
        throw std::invalid_argument("invalid bracket: empty search interval");
    return scan_and_bisect(problem.stack, false, problem.frequency, lo, hi, problem.scan_points,
                           problem.rel_tolerance, max_modes);
}

std::vector<ModeSolution> solve_modes_at_wavelength(const LayerStack& stack, double wavelength,
                                                    int max_modes, int scan_points, double rel_tolerance)
{
    validate(stack);
    if (wavelength <= 0.0)
        throw std::invalid_argument("wavelength must be > 0");
    if (max_modes < 1)
        throw std::invalid_argument("max_modes must be >= 1");
    double vs = shear_velocity(stack.substrate);
    double vl = max_layer_velocity(stack);
    if (stack.layers.empty() || vl >= vs)
        return {};
    const double eps = 1e-9;
    return scan_and_bisect(stack, true, wavelength, vl * (1.0 + eps), vs * (1.0 - eps), scan_points,
                           rel_tolerance, max_modes);
}

LayerStack calibrated_default_stack()
{
    LayerStack s = calibrated_bare_stack();
    Material cofeb = builtin_material("CoFeB");
    cofeb.shear_stiffness = kCoFeBEffectiveMu;
    s.layers.push_back({cofeb, 100e-9});
    return s;
}

LayerStack calibrated_bare_stack()
{
    LayerStack s;
    s.substrate = builtin_material("LiNbO3");
    s.substrate.shear_stiffness = kSubstrateEffectiveMu;
    Material zno = builtin_material("ZnO");
    zno.shear_stiffness = kZnOEffectiveMu;
    s.layers.push_back({zno, 700e-9});
    return s;
}

} // namespace msaw
