#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g2coh/g2_core.hpp"
#include "g2coh/overlap_engine.hpp"

namespace g2coh {

enum class SweepAxis { Tau, Gamma, TauP, OmegaD };

std::string_view to_string(SweepAxis axis);
/// Accepts "tau", "gamma", "taup", "omega_d" (also "omegad").
SweepAxis parse_sweep_axis(std::string_view text);

struct SweepGrid {
  ScenarioSpec base{};
  SweepAxis axis = SweepAxis::Tau;
  double start = 0.0;
  double stop = 0.0;
  std::size_t points = 2;
  /// Keep taup == tau along a tau sweep (matched source/detection timing).
  bool lock_taup_to_tau = false;
  OverlapMethod method = OverlapMethod::ClosedForm;
  QuadratureSettings quadrature{};
};

/// Throws DomainError unless points >= 2 and start < stop.
void validate(const SweepGrid& grid);

/// Linear grid from start to stop inclusive. A gamma sweep starting at 0 is
/// open at the origin: stop * k / points for k = 1..points.
std::vector<double> axis_values(const SweepGrid& grid);

ScenarioSpec scenario_at(const SweepGrid& grid, double axis_value);

struct SweepRecord {
  std::size_t index = 0;
  double axis_value = 0.0;
  ScenarioSpec scenario{};
  std::array<double, 6> abs_j{};
  G2Result g2{};
  /// Set when the point threw; the message is kept and the sweep continues.
  std::optional<std::string> failure;
  /// Wall time of this point. Not part of any serialized dataset.
  double elapsed_seconds = 0.0;

  /// Flagged points still carry a meaningful quotient (tiny detection
  /// probabilities legitimately give large g2); only failures and 0/0 are
  /// dropped.
  bool usable() const { return !failure && std::isfinite(g2.value); }
};

/// Evaluates every grid point. workers == 0 selects the hardware
/// concurrency. Output is ordered by grid index and does not depend on the
/// worker count.
std::vector<SweepRecord> run_sweep(const SweepGrid& grid, unsigned workers = 0);

enum class ExtremumKind { Max, Min };

struct Extremum {
  double axis_value;
  double g2;
  ExtremumKind kind;
};

struct ExtremaReport {
  std::vector<Extremum> extrema;
  std::size_t oscillation_count = 0;  // interior maxima
  double max_g2 = 0.0;
  bool bunching = false;
};

inline constexpr double kPlateauTolerance = 1e-9;

/// Interior extrema by three-point comparison after merging runs of values
/// within kPlateauTolerance. Records that are not usable() are skipped.
/// Throws DomainError with fewer than 5 usable records.
ExtremaReport analyze_extrema(const std::vector<SweepRecord>& records);

struct BunchingReport {
  bool bunching = false;
  double max_g2 = 0.0;
  double argmax = 0.0;
};

/// bunching iff the largest usable g2 exceeds 1 + 1e-9.
BunchingReport detect_bunching(const std::vector<SweepRecord>& records);

}  // namespace g2coh
