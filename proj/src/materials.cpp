#include "msaw/materials.hpp"

#include <cmath>

namespace msaw {

double shear_velocity(const Material& m)
{
    if (!m.shear_stiffness)
        throw std::invalid_argument("material incomplete: shear stiffness unset for '" + m.name + "'");
    if (m.density <= 0.0 || *m.shear_stiffness <= 0.0)
        throw std::invalid_argument("material incomplete: nonpositive density or stiffness for '" + m.name + "'");
    return std::sqrt(*m.shear_stiffness / m.density);
}

std::vector<Material> builtin_materials()
{
    // Values as printed in the source table, GPa converted to Pa. The LiNbO3
    // C12/C13 entries and the ZnO C44 entry disagree with standard
    // literature; they are stored verbatim and flagged as_printed, and the
    // dispersion module carries calibrated effective stiffnesses instead.
    std::vector<Material> cat;

    Material linbo3;
    linbo3.name = "LiNbO3";
    linbo3.density = 4700.0;
    linbo3.c11 = 202.897e9;
    linbo3.c12 = 529.177e9;
    linbo3.c13 = 749.098e9;
    linbo3.c33 = 243.075e9;
    linbo3.c44 = 599.034e9;
    linbo3.c66 = 748.772e9;
    linbo3.e15 = 3.69594;
    linbo3.e16 = -2.53384;
    linbo3.e31 = 0.193644;
    linbo3.e33 = 1.30863;
    linbo3.eps11 = 43.6;
    linbo3.eps33 = 29.16;
    linbo3.as_printed = true;
    cat.push_back(linbo3);

    Material zno;
    zno.name = "ZnO";
    zno.density = 5680.0;
    zno.c11 = 209.14e9;
    zno.c12 = 121.14e9;
    zno.c13 = 105.359e9;
    zno.c33 = 211.194e9;
    zno.c44 = 423.729e9;
    zno.c66 = 442.478e9;
    zno.e15 = -0.48;
    zno.e31 = -0.56;
    zno.e33 = 1.32;
    zno.eps11 = 8.54;
    zno.eps33 = 10.204;
    zno.as_printed = true;
    cat.push_back(zno);

    Material cofeb;
    cofeb.name = "CoFeB";
    cofeb.density = 8000.0;
    cofeb.c11 = 257e9;
    cofeb.c12 = 162e9;
    cofeb.c33 = 105e9;
    cofeb.shear_stiffness = (257e9 - 162e9) / 2.0; // (C11-C12)/2
    cofeb.as_printed = true;
    cat.push_back(cofeb);

    return cat;
}

Material builtin_material(const std::string& name)
{
    for (auto& m : builtin_materials())
        if (m.name == name)
            return m;
    throw std::invalid_argument("unknown builtin material '" + name + "'");
}

void validate(const Material& m)
{
    if (m.density <= 0.0)
        throw std::invalid_argument("material '" + m.name + "': density must be > 0");
    if (m.shear_stiffness && *m.shear_stiffness <= 0.0)
        throw std::invalid_argument("material '" + m.name + "': shear stiffness must be > 0");
}

void validate(const LayerStack& s)
{
    validate(s.substrate);
    for (auto& l : s.layers) {
        validate(l.material);
        if (l.thickness <= 0.0)
            throw std::invalid_argument("layer '" + l.material.name + "': thickness must be > 0");
    }
}

} // namespace msaw
