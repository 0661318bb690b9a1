#pragma once

#include "msaw/device.hpp"
#include "msaw/dispersion.hpp"
#include "msaw/pipeline.hpp"
#include "msaw/rfid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace msaw {

/// Complete simulation scenario: device, physics, environment, acquisition
/// grid and reader settings. A "{}" document yields the default device.
struct Scenario {
    DeviceGeometry geometry = default_geometry();
    SensorPhysics physics = default_physics();
    EnvironmentState environment;
    FrequencyGrid grid;
    std::optional<NoiseSpec> noise;
    InterrogationSettings interrogation;
    std::optional<TagCode> tag;
    double tag_amplitude_db = -24.0;
    LayerStack stack = calibrated_default_stack();
};

/// Parses and validates a JSON scenario document, applying defaults for
/// every absent key. Unknown keys are rejected in strict mode, collected as
/// warnings otherwise. Validation errors name the offending key.
Scenario load_scenario(const std::string& json_text, bool strict = true,
                       std::vector<std::string>* warnings = nullptr);

/// Serializes a scenario with every field explicit; load(dump(s)) == load of
/// the original document.
std::string dump_scenario(const Scenario& scenario);

/// Geometry with the tag echoes appended when a tag is configured.
DeviceGeometry effective_geometry(const Scenario& scenario);

} // namespace msaw
