#include "nhqw/config_io.hpp"

#include <array>
#include <cstdio>
#include <numbers>

#include <json.hpp>

namespace nhqw {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;

double require_number(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number())
    throw ConfigError(std::string("config: missing numeric field '") + key +
                      "'");
  return j[key].get<double>();
}

int require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ConfigError(std::string("config: missing integer field '") + key +
                      "'");
  return j[key].get<int>();
}

struct Preset {
  const char* name;
  double t1l, t2l, t1r, t2r;  // units of pi
  double gamma;
  int n_left, n_right;
};

// Lattice sizes: spectrum presets use 30 sites per region; the dynamics
// presets are sized for their figure's walk (steps + 2 margins around the
// start site).
constexpr std::array<Preset, 6> kPresets{{
    {"fig2a", -0.0625, 0.75, 0.5625, 0.45, 0.2746, 30, 30},
    {"fig2e", -0.0625, 0.75, 0.5625, 0.45, 0.2746, 9, 10},
    {"fig3e", -0.0625, 0.75, 0.5625, 0.45, 0.2746, 3, 16},
    {"figS2", -0.0625, -0.9375, 0.5625, -0.44, 0.2746, 30, 30},
    {"figS3", -0.0625, 0.75, 0.5625, 0.45, 0.2746, 2, 303},
    {"figS4", -0.0625, 0.75, 0.5625, 0.45, 0.1373, 9, 10},
}};

}  // namespace

WalkConfig walk_config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");

  const double t1l = require_number(j, "theta1_left_pi");
  const double t2l = require_number(j, "theta2_left_pi");
  const double t1r = require_number(j, "theta1_right_pi");
  const double t2r = require_number(j, "theta2_right_pi");
  const double gamma = require_number(j, "gamma");
  const int n_left = require_int(j, "n_left");
  const int n_right = require_int(j, "n_right");

  if (!j.contains("boundary") || !j["boundary"].is_string())
    throw ConfigError("config: missing string field 'boundary'");
  const std::string b = j["boundary"].get<std::string>();
  Boundary boundary;
  if (b == "open")
    boundary = Boundary::Open;
  else if (b == "periodic")
    boundary = Boundary::Periodic;
  else
    throw ConfigError("config: boundary must be \"open\" or \"periodic\"");

  return WalkConfig(CoinParams::from_pi_units(t1l, t2l),
                    CoinParams::from_pi_units(t1r, t2r), gamma, n_left,
                    n_right, boundary);
}

std::string walk_config_to_json(const WalkConfig& config) {
  json j;
  j["theta1_left_pi"] = config.left.theta1 / kPi;
  j["theta2_left_pi"] = config.left.theta2 / kPi;
  j["theta1_right_pi"] = config.right.theta1 / kPi;
  j["theta2_right_pi"] = config.right.theta2 / kPi;
  j["gamma"] = config.gamma;
  j["n_left"] = config.n_left;
  j["n_right"] = config.n_right;
  j["boundary"] = config.boundary == Boundary::Open ? "open" : "periodic";
  return j.dump(2);
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  names.reserve(kPresets.size());
  for (const Preset& p : kPresets) names.emplace_back(p.name);
  return names;
}

bool has_preset(const std::string& name) {
  for (const Preset& p : kPresets)
    if (name == p.name) return true;
  return false;
}

WalkConfig preset_config(const std::string& name) {
  for (const Preset& p : kPresets) {
    if (name == p.name)
      return WalkConfig(CoinParams::from_pi_units(p.t1l, p.t2l),
                        CoinParams::from_pi_units(p.t1r, p.t2r), p.gamma,
                        p.n_left, p.n_right, Boundary::Open);
  }
  throw ConfigError("unknown preset '" + name + "'");
}

}  // namespace nhqw
