#include "g2coh/sweep_analysis.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "g2coh/errors.hpp"

namespace g2coh {

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::Tau:
      return "tau";
    case SweepAxis::Gamma:
      return "gamma";
    case SweepAxis::TauP:
      return "taup";
    case SweepAxis::OmegaD:
      return "omega_d";
  }
  return "unknown";
}

SweepAxis parse_sweep_axis(std::string_view text) {
  if (text == "tau") return SweepAxis::Tau;
  if (text == "gamma") return SweepAxis::Gamma;
  if (text == "taup") return SweepAxis::TauP;
  if (text == "omega_d" || text == "omegad") return SweepAxis::OmegaD;
  throw DomainError("unknown sweep axis '" + std::string(text) + "' (expected tau|gamma|taup|omega_d)");
}

void validate(const SweepGrid& grid) {
  if (grid.points < 2) throw DomainError("sweep: at least 2 points are required");
  if (!std::isfinite(grid.start) || !std::isfinite(grid.stop) || !(grid.start < grid.stop)) {
    throw DomainError("sweep: need finite start < stop");
  }
  if ((grid.axis == SweepAxis::Gamma || grid.axis == SweepAxis::OmegaD) && grid.start < 0.0) {
    throw DomainError("sweep: gamma and omega_d ranges must be non-negative");
  }
  if (grid.lock_taup_to_tau && grid.axis != SweepAxis::Tau) {
    throw DomainError("sweep: lock_taup_to_tau requires a tau sweep");
  }
  validate(grid.quadrature);
}

std::vector<double> axis_values(const SweepGrid& grid) {
  validate(grid);
  std::vector<double> values(grid.points);
  const auto n = static_cast<double>(grid.points);
  if (grid.axis == SweepAxis::Gamma && grid.start == 0.0) {
    for (std::size_t k = 0; k < grid.points; ++k) values[k] = grid.stop * static_cast<double>(k + 1) / n;
    return values;
  }
  // Weighted endpoints keep symmetric grids exactly antisymmetric about 0.
  for (std::size_t k = 0; k < grid.points; ++k) {
    const double t = static_cast<double>(k) / (n - 1.0);
    const double u = static_cast<double>(grid.points - 1 - k) / (n - 1.0);
    values[k] = grid.start * u + grid.stop * t;
  }
  return values;
}

ScenarioSpec scenario_at(const SweepGrid& grid, double axis_value) {
  ScenarioSpec s = grid.base;
  switch (grid.axis) {
    case SweepAxis::Tau:
      s.tau = axis_value;
      if (grid.lock_taup_to_tau) s.taup = axis_value;
      break;
    case SweepAxis::Gamma:
      s.gamma = axis_value;
      break;
    case SweepAxis::TauP:
      s.taup = axis_value;
      break;
    case SweepAxis::OmegaD:
      s.omegad = axis_value;
      break;
  }
  return s;
}

namespace {

SweepRecord evaluate_point(const SweepGrid& grid, std::size_t index, double value) {
  const auto begin = std::chrono::steady_clock::now();
  SweepRecord r;
  r.index = index;
  r.axis_value = value;
  r.scenario = scenario_at(grid, value);
  try {
    const OverlapSet overlaps = compute_overlap_set(r.scenario, grid.method, grid.quadrature);
    r.abs_j = overlaps.magnitudes();
    r.g2 = g2_from_overlaps(overlaps);
  } catch (const std::exception& e) {
    r.failure = e.what();
    r.abs_j.fill(std::numeric_limits<double>::quiet_NaN());
    r.g2.value = std::numeric_limits<double>::quiet_NaN();
  }
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
  return r;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepGrid& grid, unsigned workers) {
  const std::vector<double> values = axis_values(grid);
  std::vector<SweepRecord> records(values.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, values.size()));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next.fetch_add(1); k < values.size(); k = next.fetch_add(1)) {
      records[k] = evaluate_point(grid, k, values[k]);
    }
  };
  if (workers <= 1) {
    work();
    return records;
  }
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return records;
}

ExtremaReport analyze_extrema(const std::vector<SweepRecord>& records) {
  struct Level {
    double axis_first;
    double axis_last;
    double g2;
  };
  std::vector<Level> levels;
  std::size_t usable = 0;
  ExtremaReport report;
  report.max_g2 = -std::numeric_limits<double>::infinity();
  for (const auto& r : records) {
    if (!r.usable()) continue;
    ++usable;
    report.max_g2 = std::max(report.max_g2, r.g2.value);
    if (!levels.empty() && std::abs(r.g2.value - levels.back().g2) <= kPlateauTolerance) {
      levels.back().axis_last = r.axis_value;
      continue;
    }
    levels.push_back({r.axis_value, r.axis_value, r.g2.value});
  }
  if (usable < 5) throw DomainError("analyze_extrema: fewer than 5 usable points");

  for (std::size_t k = 1; k + 1 < levels.size(); ++k) {
    const double here = levels[k].g2;
    const double axis = 0.5 * (levels[k].axis_first + levels[k].axis_last);
    if (here > levels[k - 1].g2 && here > levels[k + 1].g2) {
      report.extrema.push_back({axis, here, ExtremumKind::Max});
      ++report.oscillation_count;
    } else if (here < levels[k - 1].g2 && here < levels[k + 1].g2) {
      report.extrema.push_back({axis, here, ExtremumKind::Min});
    }
  }
  report.bunching = report.max_g2 > 1.0 + 1e-9;
  return report;
}

BunchingReport detect_bunching(const std::vector<SweepRecord>& records) {
  BunchingReport report;
  report.max_g2 = -std::numeric_limits<double>::infinity();
  report.argmax = std::numeric_limits<double>::quiet_NaN();
  for (const auto& r : records) {
    if (!r.usable()) continue;
    if (r.g2.value > report.max_g2) {
      report.max_g2 = r.g2.value;
      report.argmax = r.axis_value;
    }
  }
  report.bunching = report.max_g2 > 1.0 + 1e-9;
  return report;
}

}  // namespace g2coh
