#pragma once

#include "msaw/device.hpp"
#include "msaw/pipeline.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace msaw {

/// Pulse-position identification code: occupied slots on a fixed time comb.
struct TagCode {
    int slot_count = 6;
    std::vector<int> occupied_slots; // sorted, unique, < slot_count
    double slot_pitch_s = 200e-9;
    double t0_s = 850e-9; // first-slot delay, past the sensing echoes
    double guard_s = 40e-9;
};

/// Time width of one echo, 2N periods of the carrier.
double echo_time_width(const DeviceGeometry& geometry, double f_center);

/// Structural checks; echo_width_s is the time width the slots must clear.
void validate(const TagCode& code, double echo_width_s);

/// Appends one bare-path echo per occupied slot to the base geometry, at
/// delays t0 + k*pitch converted to path lengths via the nominal bare
/// velocity. Throws on slot collision with the sensing echoes (ids 1-2) and,
/// when max_delay_s > 0, on delays beyond the unambiguous record.
DeviceGeometry encode(const TagCode& code, const DeviceGeometry& base, const SensorPhysics& physics,
                      double id_amplitude_db = -24.0, double max_delay_s = 0.0);

/// Slot occupancy from a time record. A slot is occupied when its window
/// maximum exceeds threshold_db relative to the strongest slot; an all-empty
/// record raises "no tag detected". Invariant under global amplitude
/// scaling.
std::vector<int> decode(const TimeResponse& tr, const TagCode& slot_template, double threshold_db = -12.0);

/// Occupancy bitmap (slot 0 = LSB) as a lowercase hex string.
std::string occupancy_hex(const std::vector<int>& occupied, int slot_count);

} // namespace msaw
