#pragma once

#include <string>
#include <vector>

#include "nhqw/model.hpp"

namespace nhqw {

/// Parse the canonical walk-configuration record:
/// {
///   "theta1_left_pi":  <number>,  "theta2_left_pi":  <number>,
///   "theta1_right_pi": <number>,  "theta2_right_pi": <number>,
///   "gamma": <number>, "n_left": <int>, "n_right": <int>,
///   "boundary": "open" | "periodic"
/// }
/// Angles are in units of pi. Throws ConfigError on malformed input.
WalkConfig walk_config_from_json(const std::string& text);

/// Serialize a config back to the canonical record (angles in units of pi).
std::string walk_config_to_json(const WalkConfig& config);

/// Named parameter presets matching the bundled figure configs.
std::vector<std::string> preset_names();
bool has_preset(const std::string& name);
WalkConfig preset_config(const std::string& name);

}  // namespace nhqw
