#pragma once

#include "msaw/materials.hpp"

#include <vector>

namespace msaw {

// Effective SH constants used by the calibrated default stack. The substrate
// stiffness was fitted once with scripts/fit_substrate_mu.py so the full
// CoFeB(100nm)/ZnO(700nm)/substrate stack has a fundamental phase velocity
// of 3772 m/s at a 9.2 um wavelength (410 MHz operating frequency).
inline constexpr double kZnOEffectiveMu = 42.37e9;        // Pa, rho*v^2 with v=2731 m/s
inline constexpr double kCoFeBEffectiveMu = 47.5e9;       // Pa, (C11-C12)/2
inline constexpr double kSubstrateEffectiveMu = 7.562016e10; // Pa, fitted
inline constexpr double kDefaultWavelength = 9.2e-6;      // m
inline constexpr double kCalibratedLoveVelocity = 3772.0; // m/s at kDefaultWavelength

struct DispersionProblem {
    LayerStack stack;
    double frequency = 0.0; // Hz
    double v_min = 0.0;     // m/s, search bounds for guided modes
    double v_max = 0.0;
    int scan_points = 2000;
    double rel_tolerance = 1e-10;
};

struct ModeSolution {
    double phase_velocity = 0.0; // m/s
    int mode_index = 0;
    double residual = 0.0; // normalized determinant value at the root
};

/// Transfer-matrix dispersion function for the Love (SH guided) branch.
/// Continuous in the trial velocity; sign changes bracket guided-mode roots.
/// Requires max-layer shear velocity < trial_velocity < substrate shear
/// velocity (throws "evanescence violated" outside the open interval).
double determinant(const LayerStack& stack, double frequency, double trial_velocity);

/// Sign-change scan over [v_min, v_max] followed by bisection. Returns up to
/// max_modes roots sorted ascending. No sign change found -> empty list.
std::vector<ModeSolution> solve_modes(const DispersionProblem& problem, int max_modes);

/// Convenience: guided modes of a stack at fixed wavelength, with search
/// bounds derived from the stack velocities. Uses the v = f*lambda coupling,
/// i.e. the wavenumber 2*pi/lambda is held fixed while v is varied.
std::vector<ModeSolution> solve_modes_at_wavelength(const LayerStack& stack, double wavelength,
                                                    int max_modes = 4, int scan_points = 2000,
                                                    double rel_tolerance = 1e-10);

/// CoFeB(100nm)/ZnO(700nm)/substrate stack with the calibrated effective
/// stiffnesses above.
LayerStack calibrated_default_stack();

/// Same stack without the CoFeB layer (the bare sensing path).
LayerStack calibrated_bare_stack();

} // namespace msaw
