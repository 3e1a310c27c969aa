#include "g2coh/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include <json.hpp>

#include "g2coh/dataset_io.hpp"
#include "g2coh/errors.hpp"

namespace g2coh {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

double to_double(std::string_view key, std::string_view text) {
  double value = 0.0;
  const auto r = std::from_chars(text.data(), text.data() + text.size(), value);
  if (r.ec != std::errc{} || r.ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ConfigError("config: '" + std::string(key) + "' expects a finite number, got '" + std::string(text) + "'");
  }
  return value;
}

template <class Int>
Int to_integer(std::string_view key, std::string_view text) {
  Int value = 0;
  const auto r = std::from_chars(text.data(), text.data() + text.size(), value);
  if (r.ec != std::errc{} || r.ptr != text.data() + text.size()) {
    throw ConfigError("config: '" + std::string(key) + "' expects a non-negative integer, got '" +
                      std::string(text) + "'");
  }
  return value;
}

bool to_bool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw ConfigError("config: '" + std::string(key) + "' expects true|false");
}

template <class F>
auto rethrow_as_config(F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

std::string json_scalar_text(std::string_view key, const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  if (value.is_number()) return value.dump();
  throw ConfigError("config: '" + std::string(key) + "' must be a scalar");
}

}  // namespace

const std::vector<std::string>& field_names() {
  static const std::vector<std::string> names{
      "model", "detector_model", "omega0", "delta",   "taup",   "omegad", "gamma", "tau",
      "method", "rel_tol",       "half_width", "max_doublings", "workers", "out", "axis", "start",
      "stop",  "points",         "lock_taup",  "modes", "draws", "seed"};
  return names;
}

void apply_field(RunConfig& c, std::string_view key, std::string_view value) {
  auto& s = c.scenario;
  if (key == "model") {
    const SpectralModel m = rethrow_as_config([&] { return parse_spectral_model(value); });
    s.photon_model = m;
    s.detector_model = m;
  } else if (key == "detector_model") {
    s.detector_model = rethrow_as_config([&] { return parse_spectral_model(value); });
  } else if (key == "omega0") {
    s.omega0 = to_double(key, value);
  } else if (key == "delta") {
    s.delta = to_double(key, value);
  } else if (key == "taup") {
    s.taup = to_double(key, value);
  } else if (key == "omegad") {
    s.omegad = to_double(key, value);
  } else if (key == "gamma") {
    s.gamma = to_double(key, value);
  } else if (key == "tau") {
    s.tau = to_double(key, value);
  } else if (key == "method") {
    c.method = rethrow_as_config([&] { return parse_overlap_method(value); });
  } else if (key == "rel_tol") {
    c.quadrature.relative_tolerance = to_double(key, value);
  } else if (key == "half_width") {
    c.quadrature.initial_half_width_multiplier = to_double(key, value);
  } else if (key == "max_doublings") {
    c.quadrature.max_domain_doublings = to_integer<int>(key, value);
  } else if (key == "workers") {
    c.workers = to_integer<unsigned>(key, value);
  } else if (key == "out") {
    c.out = std::string(value);
  } else if (key == "axis") {
    c.axis = rethrow_as_config([&] { return parse_sweep_axis(value); });
  } else if (key == "start") {
    c.start = to_double(key, value);
  } else if (key == "stop") {
    c.stop = to_double(key, value);
  } else if (key == "points") {
    c.points = to_integer<std::size_t>(key, value);
  } else if (key == "lock_taup") {
    c.lock_taup = to_bool(key, value);
  } else if (key == "modes") {
    c.modes = to_integer<std::size_t>(key, value);
  } else if (key == "draws") {
    c.draws = to_integer<std::size_t>(key, value);
  } else if (key == "seed") {
    c.seed = to_integer<std::uint64_t>(key, value);
  } else {
    throw ConfigError("config: unknown field '" + std::string(key) + "'");
  }
}

RunConfig config_from_json(std::string_view json_text, RunConfig base) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("config") && doc["config"].is_object()) doc = doc["config"];
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
  for (const auto& item : doc.items()) {
    const auto& names = field_names();
    if (std::find(names.begin(), names.end(), item.key()) == names.end()) {
      throw ConfigError("config: unknown field '" + item.key() + "'");
    }
  }
  // Field order matters: "model" sets both models before "detector_model".
  for (const auto& name : field_names()) {
    if (doc.contains(name)) apply_field(base, name, json_scalar_text(name, doc[name]));
  }
  return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  return config_from_json(read_text_file(path), std::move(base));
}

std::string config_to_json(const RunConfig& c) {
  ordered_json j;
  j["model"] = std::string(to_string(c.scenario.photon_model));
  j["detector_model"] = std::string(to_string(c.scenario.detector_model));
  j["omega0"] = c.scenario.omega0;
  j["delta"] = c.scenario.delta;
  j["taup"] = c.scenario.taup;
  j["omegad"] = c.scenario.omegad;
  j["gamma"] = c.scenario.gamma;
  j["tau"] = c.scenario.tau;
  j["method"] = std::string(to_string(c.method));
  j["rel_tol"] = c.quadrature.relative_tolerance;
  j["half_width"] = c.quadrature.initial_half_width_multiplier;
  j["max_doublings"] = c.quadrature.max_domain_doublings;
  j["workers"] = c.workers;
  j["out"] = c.out;
  j["axis"] = std::string(to_string(c.axis));
  j["start"] = c.start;
  j["stop"] = c.stop;
  j["points"] = c.points;
  j["lock_taup"] = c.lock_taup;
  j["modes"] = c.modes;
  j["draws"] = c.draws;
  j["seed"] = c.seed;
  return j.dump(2);
}

void validate(const RunConfig& c) {
  rethrow_as_config([&] {
    validate(c.scenario);
    validate(c.quadrature);
    return 0;
  });
  if (c.modes < 64) throw ConfigError("config: modes must be >= 64");
}

SweepGrid sweep_grid_from(const RunConfig& c) {
  SweepGrid grid;
  grid.base = c.scenario;
  grid.axis = c.axis;
  grid.start = c.start;
  grid.stop = c.stop;
  grid.points = c.points;
  grid.lock_taup_to_tau = c.lock_taup;
  grid.method = c.method;
  grid.quadrature = c.quadrature;
  rethrow_as_config([&] {
    validate(grid);
    return 0;
  });
  return grid;
}

}  // namespace g2coh
