#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msaw/materials.hpp"

#include <cmath>
#include <random>

using namespace msaw;

TEST_CASE("builtin catalog carries the published constants verbatim")
{
    Material cofeb = builtin_material("CoFeB");
    CHECK(cofeb.density == 8000.0);
    CHECK(cofeb.c11 == 257e9);
    CHECK(cofeb.c12 == 162e9);
    CHECK(cofeb.as_printed);

    Material zno = builtin_material("ZnO");
    CHECK(zno.density == 5680.0);
    CHECK(zno.c44 == 423.729e9); // stored as printed even though suspect

    Material linbo3 = builtin_material("LiNbO3");
    CHECK(linbo3.density == 4700.0);
    CHECK(linbo3.c12 == 529.177e9); // as printed
}

TEST_CASE("CoFeB effective shear stiffness is the (C11-C12)/2 reduction")
{
    Material cofeb = builtin_material("CoFeB");
    REQUIRE(cofeb.shear_stiffness.has_value());
    CHECK(*cofeb.shear_stiffness == doctest::Approx(47.5e9));
    // independently: sqrt(47.5e9/8000) = 2436.7 m/s
    CHECK(shear_velocity(cofeb) == doctest::Approx(2436.7).epsilon(1e-4));
}

TEST_CASE("LiNbO3 and ZnO ship without an effective stiffness")
{
    CHECK_FALSE(builtin_material("LiNbO3").shear_stiffness.has_value());
    CHECK_FALSE(builtin_material("ZnO").shear_stiffness.has_value());
    CHECK_THROWS_AS(shear_velocity(builtin_material("ZnO")), std::invalid_argument);
}

TEST_CASE("shear velocity identity and error cases")
{
    Material m;
    m.name = "unit";
    m.density = 1234.5;
    m.shear_stiffness = 1234.5; // mu == rho -> 1 m/s
    CHECK(shear_velocity(m) == doctest::Approx(1.0));

    m.shear_stiffness.reset();
    CHECK_THROWS_WITH_AS(shear_velocity(m), doctest::Contains("material incomplete"),
                         std::invalid_argument);
    CHECK_THROWS_AS(builtin_material("Unobtainium"), std::invalid_argument);
}

TEST_CASE("shear velocity is monotone in stiffness and density")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> pos(1e2, 1e12);
    for (int i = 0; i < 200; ++i) {
        Material a, b;
        a.density = b.density = pos(rng);
        double mu1 = pos(rng), mu2 = pos(rng);
        a.shear_stiffness = std::min(mu1, mu2);
        b.shear_stiffness = std::max(mu1, mu2) * (1 + 1e-9);
        CHECK(shear_velocity(a) < shear_velocity(b));

        Material c = b;
        c.density = b.density * 1.5;
        CHECK(shear_velocity(c) < shear_velocity(b));
    }
}

TEST_CASE("stack validation rejects nonpositive thickness")
{
    LayerStack s;
    s.substrate = builtin_material("CoFeB");
    s.layers.push_back({builtin_material("CoFeB"), 0.0});
    CHECK_THROWS_AS(validate(s), std::invalid_argument);
    s.layers[0].thickness = 1e-7;
    CHECK_NOTHROW(validate(s));
}
