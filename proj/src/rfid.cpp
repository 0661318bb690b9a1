#include "msaw/rfid.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace msaw {

double echo_time_width(const DeviceGeometry& geometry, double f_center)
{
    if (f_center <= 0.0)
        throw std::invalid_argument("echo_time_width: f_center must be > 0");
    return 2.0 * geometry.idt_pairs / f_center;
}

void validate(const TagCode& code, double echo_width_s)
{
    if (code.slot_count < 1)
        throw std::invalid_argument("tag code: slot_count must be >= 1");
    if (code.occupied_slots.empty())
        throw std::invalid_argument("tag code: at least one occupied slot required");
    std::set<int> seen;
    for (int k : code.occupied_slots) {
        if (k < 0 || k >= code.slot_count)
            throw std::invalid_argument("tag code: slot index out of range");
        if (!seen.insert(k).second)
            throw std::invalid_argument("tag code: duplicate slot index");
    }
    if (code.guard_s < 0.0 || code.t0_s <= 0.0)
        throw std::invalid_argument("tag code: t0 must be > 0 and guard >= 0");
    if (code.slot_pitch_s <= echo_width_s + code.guard_s)
        throw std::invalid_argument("tag code: slot pitch must exceed echo width plus guard");
}

DeviceGeometry encode(const TagCode& code, const DeviceGeometry& base, const SensorPhysics& physics,
                      double id_amplitude_db, double max_delay_s)
{
    double f1 = nominal_frequency(physics.v1_nominal, base.wavelength);
    validate(code, echo_time_width(base, f1));

    // Sensing echoes 1-2 are reserved; their delays must not fall into any
    // slot window.
    EnvironmentState ref;
    ref.temperature_c = ref.reference_temperature_c;
    ref.field_mt = physics.magnetoelastic.h_ref_mt;
    std::vector<double> reserved;
    for (auto& e : base.echoes)
        if (e.id == 1 || e.id == 2)
            reserved.push_back(echo_delay(base, physics, e, ref));

    DeviceGeometry out = base;
    double width = echo_time_width(base, f1);
    for (int k : code.occupied_slots) {
        double t_slot = code.t0_s + k * code.slot_pitch_s;
        if (max_delay_s > 0.0 && t_slot > max_delay_s)
            throw std::invalid_argument("tag code: slot delay beyond the unambiguous time record");
        for (double tr : reserved)
            if (std::abs(t_slot - tr) < code.slot_pitch_s / 2.0 + width)
                throw std::invalid_argument("tag code: slot collides with a sensing echo");
        EchoSpec echo;
        echo.id = 100 + k;
        echo.segments = {{t_slot * physics.v1_nominal / base.wavelength, PathKind::bare}};
        echo.amplitude_db = id_amplitude_db;
        echo.polarity = 1;
        out.echoes.push_back(echo);
    }
    return out;
}

std::vector<int> decode(const TimeResponse& tr, const TagCode& slot_template, double threshold_db)
{
    if (slot_template.slot_count < 1)
        throw std::invalid_argument("decode: slot_count must be >= 1");
    double half = slot_template.slot_pitch_s / 2.0 - slot_template.guard_s;
    if (half <= 0.0)
        throw std::invalid_argument("decode: guard leaves no slot window");
    double record_end = tr.dt * tr.values.size();
    double last_slot = slot_template.t0_s + (slot_template.slot_count - 1) * slot_template.slot_pitch_s;
    if (last_slot + half > record_end)
        throw std::invalid_argument("decode: slot template extends past the time record");

    std::vector<double> slot_max(slot_template.slot_count, 0.0);
    for (int k = 0; k < slot_template.slot_count; ++k) {
        double t_slot = slot_template.t0_s + k * slot_template.slot_pitch_s;
        int lo = std::max(0, (int)std::ceil((t_slot - half - tr.t_start) / tr.dt));
        int hi = std::min((int)tr.values.size() - 1, (int)std::floor((t_slot + half - tr.t_start) / tr.dt));
        for (int i = lo; i <= hi; ++i)
            slot_max[k] = std::max(slot_max[k], std::abs(tr.values[i]));
    }
    double strongest = *std::max_element(slot_max.begin(), slot_max.end());
    if (!(strongest > 0.0))
        throw std::runtime_error("no tag detected");

    double floor = strongest * std::pow(10.0, threshold_db / 20.0);
    std::vector<int> occupied;
    for (int k = 0; k < slot_template.slot_count; ++k)
        if (slot_max[k] >= floor)
            occupied.push_back(k);
    return occupied;
}

std::string occupancy_hex(const std::vector<int>& occupied, int slot_count)
{
    if (slot_count < 1 || slot_count > 64)
        throw std::invalid_argument("occupancy_hex: slot_count must be in [1, 64]");
    std::uint64_t bits = 0;
    for (int k : occupied) {
        if (k < 0 || k >= slot_count)
            throw std::invalid_argument("occupancy_hex: slot index out of range");
        bits |= (std::uint64_t)1 << k;
    }
    int digits = (slot_count + 3) / 4;
    std::string out(digits, '0');
    for (int i = 0; i < digits; ++i) {
        int nib = (int)((bits >> (4 * (digits - 1 - i))) & 0xF);
        out[i] = "0123456789abcdef"[nib];
    }
    return out;
}

} // namespace msaw
