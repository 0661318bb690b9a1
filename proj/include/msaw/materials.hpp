#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace msaw {

/// Material constants in SI units. Only density and the effective
/// shear-horizontal stiffness feed the dispersion model; the full stiffness,
/// piezoelectric and permittivity entries are carried for data fidelity.
struct Material {
    std::string name;
    double density = 0.0;                  // kg/m^3
    std::optional<double> shear_stiffness; // Pa, effective SH stiffness mu

    // Optional full constant set (Pa, C/m^2, dimensionless).
    std::optional<double> c11, c12, c13, c33, c44, c66;
    std::optional<double> e15, e16, e31, e33;
    std::optional<double> eps11, eps33;

    // True when the entry reproduces a published table verbatim, including
    // values known to be inconsistent with standard literature.
    bool as_printed = false;
};

struct Layer {
    Material material;
    double thickness = 0.0; // m
};

/// Ordered layers from the substrate surface upward over a half-space
/// substrate. An empty layer list is a bare substrate.
struct LayerStack {
    std::vector<Layer> layers;
    Material substrate;
};

/// sqrt(mu/rho). Throws if the effective shear stiffness is unset or the
/// inputs are nonpositive.
double shear_velocity(const Material& m);

/// Catalog of the published LiNbO3 / ZnO / CoFeB constants, stored verbatim.
/// CoFeB gets shear_stiffness = (C11-C12)/2; LiNbO3 and ZnO are left without
/// an effective stiffness (their printed shear constants are unusable as-is)
/// and the calibrated defaults in dispersion.hpp supply one.
std::vector<Material> builtin_materials();

/// Catalog lookup by name. Throws if absent.
Material builtin_material(const std::string& name);

void validate(const Material& m);
void validate(const LayerStack& s);

} // namespace msaw
