#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msaw/rfid.hpp"

#include <cmath>

using namespace msaw;

namespace {

SensorPhysics toy_physics()
{
    SensorPhysics p;
    p.v1_nominal = 3680.0; // echo 1 at 300 ns, carrier 400 MHz
    p.v2_nominal = 3772.0; // echo 2 at ~439 ns, carrier 410 MHz
    return p;
}

TimeResponse tag_record(const TagCode& code, const EnvironmentState& env = {})
{
    DeviceGeometry g = encode(code, default_geometry(), toy_physics());
    FrequencyGrid grid;
    Spectrum s = synthesize_s11(g, toy_physics(), env, grid);
    return to_time_domain(s, 4);
}

} // namespace

TEST_CASE("echo time width is 2N carrier periods")
{
    DeviceGeometry g = default_geometry();
    CHECK(echo_time_width(g, 410e6) == doctest::Approx(22.0 / 410e6).epsilon(1e-12));
    CHECK_THROWS_AS(echo_time_width(g, 0.0), std::invalid_argument);
}

TEST_CASE("tag code validation")
{
    const double width = 55e-9;
    TagCode ok;
    ok.occupied_slots = {0, 2, 5};
    CHECK_NOTHROW(validate(ok, width));

    TagCode empty = ok;
    empty.occupied_slots.clear();
    CHECK_THROWS_AS(validate(empty, width), std::invalid_argument);

    TagCode out_of_range = ok;
    out_of_range.occupied_slots = {0, 6};
    CHECK_THROWS_AS(validate(out_of_range, width), std::invalid_argument);

    TagCode dup = ok;
    dup.occupied_slots = {1, 1};
    CHECK_THROWS_AS(validate(dup, width), std::invalid_argument);

    TagCode tight = ok;
    tight.slot_pitch_s = 90e-9; // width + 40 ns guard = 95 ns > pitch
    CHECK_THROWS_AS(validate(tight, width), std::invalid_argument);
}

TEST_CASE("encoding appends one bare echo per occupied slot at the slot delay")
{
    TagCode code;
    code.occupied_slots = {0, 2, 5};
    DeviceGeometry base = default_geometry();
    SensorPhysics p = toy_physics();
    DeviceGeometry g = encode(code, base, p);
    REQUIRE(g.echoes.size() == base.echoes.size() + 3);

    EnvironmentState env;
    const double expected[] = {850e-9, 1250e-9, 1850e-9};
    for (int i = 0; i < 3; ++i) {
        const EchoSpec& e = g.echoes[base.echoes.size() + i];
        CHECK(e.id == 100 + code.occupied_slots[i]);
        REQUIRE(e.segments.size() == 1);
        CHECK(e.segments[0].kind == PathKind::bare);
        CHECK(echo_delay(g, p, e, env) == doctest::Approx(expected[i]).epsilon(1e-12));
    }
}

TEST_CASE("encoding rejects collisions and over-long records")
{
    SensorPhysics p = toy_physics();
    TagCode collide;
    collide.occupied_slots = {0};
    collide.t0_s = 300e-9; // on top of sensing echo 1
    CHECK_THROWS_WITH_AS(encode(collide, default_geometry(), p), doctest::Contains("collides"),
                         std::invalid_argument);

    TagCode late;
    late.occupied_slots = {5};
    CHECK_THROWS_AS(encode(late, default_geometry(), p, -24.0, 1.5e-6), std::invalid_argument);
    CHECK_NOTHROW(encode(late, default_geometry(), p, -24.0, 2.5e-6));
}

TEST_CASE("exhaustive encode-decode round trip over a 4-slot code space")
{
    TagCode code;
    code.slot_count = 4;
    for (int bits = 1; bits < 16; ++bits) {
        code.occupied_slots.clear();
        for (int k = 0; k < 4; ++k)
            if (bits & (1 << k))
                code.occupied_slots.push_back(k);
        TimeResponse tr = tag_record(code);
        CHECK(decode(tr, code) == code.occupied_slots);
    }
}

TEST_CASE("decoding is invariant under global amplitude scaling")
{
    TagCode code;
    code.occupied_slots = {1, 3, 4};
    TimeResponse tr = tag_record(code);
    auto ref = decode(tr, code);
    for (auto& v : tr.values)
        v *= 0.013;
    CHECK(decode(tr, code) == ref);
}

TEST_CASE("environment changes move slot delays by well under the decode margin")
{
    TagCode code;
    code.occupied_slots = {0, 2, 5};
    EnvironmentState hot;
    hot.temperature_c = 65.0; // ~2700 ppm of delay stretch

    TimeResponse cold_tr = tag_record(code);
    TimeResponse hot_tr = tag_record(code, hot);
    CHECK(decode(cold_tr, code) == code.occupied_slots);
    CHECK(decode(hot_tr, code) == code.occupied_slots); // occupancy never flips

    // the relative slot-delay change stays below 0.3%
    SensorPhysics p = toy_physics();
    DeviceGeometry g = encode(code, default_geometry(), p);
    EnvironmentState ref;
    for (std::size_t i = default_geometry().echoes.size(); i < g.echoes.size(); ++i) {
        double d0 = echo_delay(g, p, g.echoes[i], ref);
        double d1 = echo_delay(g, p, g.echoes[i], hot);
        CHECK(std::abs(d1 - d0) / d0 < 0.003);
    }
}

TEST_CASE("an empty record raises no-tag-detected")
{
    TagCode code;
    code.occupied_slots = {0};
    TimeResponse tr;
    tr.dt = 1e-9;
    tr.source_points = 4096;
    tr.values.assign(4096, 0.0);
    CHECK_THROWS_WITH_AS(decode(tr, code), "no tag detected", std::runtime_error);

    // template that does not fit the record
    tr.values.assign(64, 0.0);
    CHECK_THROWS_AS(decode(tr, code), std::invalid_argument);
}

TEST_CASE("occupancy bitmap prints as lowercase hex, slot 0 in the LSB")
{
    CHECK(occupancy_hex({0, 2, 5}, 6) == "25");
    CHECK(occupancy_hex({0}, 4) == "1");
    CHECK(occupancy_hex({3}, 4) == "8");
    CHECK(occupancy_hex({}, 8) == "00");
    CHECK(occupancy_hex({0, 1, 2, 3, 4, 5, 6, 7}, 8) == "ff");
    CHECK(occupancy_hex({11}, 12) == "800");
    CHECK_THROWS_AS(occupancy_hex({4}, 4), std::invalid_argument);
    CHECK_THROWS_AS(occupancy_hex({0}, 0), std::invalid_argument);
    CHECK_THROWS_AS(occupancy_hex({0}, 65), std::invalid_argument);
}
