#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "g2coh/overlap_engine.hpp"
#include "g2coh/spectral_models.hpp"
#include "g2coh/sweep_analysis.hpp"

namespace g2coh {

/// Fully resolved run configuration. Field names double as JSON keys and
/// command-line flag names (see field_names()).
struct RunConfig {
  ScenarioSpec scenario = ScenarioSpec::uniform(SpectralModel::Gaussian, 5e14, 1e12, 0.0, 4.5e14, 1e12, 0.0);
  OverlapMethod method = OverlapMethod::ClosedForm;
  QuadratureSettings quadrature{};
  unsigned workers = 0;
  std::string out = "g2coh_out";

  // sweep
  SweepAxis axis = SweepAxis::Tau;
  double start = -2e-11;
  double stop = 2e-11;
  std::size_t points = 401;
  bool lock_taup = false;

  // validate
  std::size_t modes = 512;
  std::size_t draws = 10;
  std::uint64_t seed = 20130826;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Every recognised key, in serialization order.
const std::vector<std::string>& field_names();

/// Sets one field from its textual value. Throws ConfigError on an unknown
/// key or an unparseable value.
void apply_field(RunConfig& config, std::string_view key, std::string_view value);

/// Parses a flat JSON object of RunConfig fields, or a metadata sidecar that
/// carries one under "config". Missing fields keep their defaults.
RunConfig config_from_json(std::string_view json_text, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});

/// Deterministic pretty-printed JSON object with every field.
std::string config_to_json(const RunConfig& config);

/// Throws ConfigError when the resolved values are unusable.
void validate(const RunConfig& config);

SweepGrid sweep_grid_from(const RunConfig& config);

}  // namespace g2coh
