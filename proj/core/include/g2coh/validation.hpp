#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "g2coh/quadrature.hpp"
#include "g2coh/spectral_models.hpp"

namespace g2coh {

struct ValidationOptions {
  std::size_t modes = 512;
  /// Random scenarios per model on top of the fixed corpus.
  std::size_t draws = 10;
  std::uint64_t seed = 20130826;
  QuadratureSettings quadrature{};
  /// Negative control: perturbs closed-form J3 by a relative 1e-6.
  bool corrupt_closed_form = false;
};

inline constexpr double kClosedFormTolerance = 1e-8;
inline constexpr double kOracleTolerance = 1e-2;
inline constexpr double kGaugeTolerance = 1e-12;

struct ValidationCheck {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  std::optional<ScenarioSpec> worst;
  bool passed() const { return max_deviation < tolerance; }
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool passed() const;
  /// Fixed-width table, one line per check, then the verdict.
  std::string table() const;
};

/// Fixed scenarios always included in validation.
std::vector<ScenarioSpec> acceptance_corpus();

/// Reproducible draws: delta, gamma in [0.5, 2]e12, omegad - omega0 in
/// [-3, 3]e12, taup and tau in [-5, 5]e-12, omega0 = 5e14. The stream is
/// derived from the seed with a fixed 64-bit generator and bit-level
/// mapping, so it is identical on every platform.
std::vector<ScenarioSpec> random_corpus(SpectralModel model, std::size_t draws, std::uint64_t seed);

/// Closed form vs quadrature, analytic vs Fock oracle, gauge residual.
ValidationReport run_validation(const ValidationOptions& options);

std::string scenario_to_json(const ScenarioSpec& scenario);

}  // namespace g2coh
