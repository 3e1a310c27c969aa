#include "g2coh/figures.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>

#include <json.hpp>

#include "g2coh/errors.hpp"
#include "g2coh/g2_core.hpp"

namespace g2coh {
namespace {

using ordered_json = nlohmann::ordered_json;

#ifndef G2COH_VERSION
#define G2COH_VERSION "unknown"
#endif

constexpr std::array<double, 5> kTaupSet{0.0, 1.5e-12, 2.5e-12, 5e-12, 10e-12};
constexpr std::array<double, 2> kGammaSet{0.77e12, 1e12};
constexpr std::array<double, 2> kOmegadSet{4.5e14, 4.875e14};
constexpr double kLorentzianCurveTau = 5e-12;

std::string stem_value(double v) { return format_double(v); }

ordered_json grid_json(const SweepGrid& g) {
  ordered_json j;
  j["model"] = std::string(to_string(g.base.photon_model));
  j["detector_model"] = std::string(to_string(g.base.detector_model));
  j["omega0"] = g.base.omega0;
  j["delta"] = g.base.delta;
  j["taup"] = g.base.taup;
  j["omegad"] = g.base.omegad;
  j["gamma"] = g.base.gamma;
  j["tau"] = g.base.tau;
  j["method"] = std::string(to_string(g.method));
  j["axis"] = std::string(to_string(g.axis));
  j["start"] = g.start;
  j["stop"] = g.stop;
  j["points"] = g.points;
  j["lock_taup"] = g.lock_taup_to_tau;
  return j;
}

CurveDataset sweep_curve(std::string name, const SweepGrid& grid, unsigned workers) {
  CurveDataset curve;
  curve.name = std::move(name);
  curve.axis_name = std::string(to_string(grid.axis));
  curve.rows = rows_from_records(run_sweep(grid, workers));
  curve.parameters_json = grid_json(grid).dump();
  return curve;
}

// Curves defined directly by a single overlap J(tau).
CurveDataset single_overlap_curve(std::string name, double half_range, std::size_t points,
                                  const std::function<double(double)>& overlap, ordered_json parameters) {
  CurveDataset curve;
  curve.name = std::move(name);
  curve.axis_name = "tau";
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t k = 0; k < points; ++k) {
    // Symmetric integer grid, so g2(-tau) and g2(tau) are evaluated at
    // exactly opposite arguments.
    const auto offset = static_cast<double>(k) - 0.5 * static_cast<double>(points - 1);
    const double tau = half_range * offset / (0.5 * static_cast<double>(points - 1));
    const double J = overlap(tau);
    const SingleOverlapMoments m = single_overlap_moments(J);
    DatasetRow row;
    row.axis_value = tau;
    row.g2 = g2_from_single_J(J);
    row.numerator = m.numerator;
    row.denominator = m.denominator;
    row.abs_j = {std::abs(J), nan, nan, nan, nan, nan};
    curve.rows.push_back(std::move(row));
  }
  parameters["axis"] = "tau";
  parameters["start"] = -half_range;
  parameters["stop"] = half_range;
  parameters["points"] = points;
  curve.parameters_json = parameters.dump();
  return curve;
}

SweepGrid base_grid(const RunConfig& config, SpectralModel model) {
  SweepGrid g;
  g.base = ScenarioSpec::uniform(model, config.scenario.omega0, config.scenario.delta, 0.0, 4.5e14, 1e12, 0.0);
  g.method = config.method;
  g.quadrature = config.quadrature;
  return g;
}

std::vector<CurveDataset> tau_family(const std::string& prefix, const RunConfig& config, SpectralModel model) {
  std::vector<CurveDataset> out;
  for (double gamma : kGammaSet) {
    for (double taup : kTaupSet) {
      SweepGrid g = base_grid(config, model);
      g.base.gamma = gamma;
      g.base.taup = taup;
      g.axis = SweepAxis::Tau;
      g.start = -20e-12;
      g.stop = 20e-12;
      g.points = 801;
      out.push_back(sweep_curve(prefix + "_taup" + stem_value(taup) + "_gamma" + stem_value(gamma), g,
                                config.workers));
    }
  }
  return out;
}

std::vector<CurveDataset> gamma_family(const std::string& prefix, const RunConfig& config, SpectralModel model,
                                       double tau) {
  std::vector<CurveDataset> out;
  for (double omegad : kOmegadSet) {
    for (double taup : kTaupSet) {
      SweepGrid g = base_grid(config, model);
      g.base.omegad = omegad;
      g.base.taup = taup;
      g.base.tau = tau;
      g.axis = SweepAxis::Gamma;
      g.start = 0.0;
      g.stop = 5e12;
      g.points = 500;
      out.push_back(sweep_curve(prefix + "_taup" + stem_value(taup) + "_omegad" + stem_value(omegad), g,
                                config.workers));
    }
  }
  return out;
}

ordered_json figure_notes(std::string_view id) {
  ordered_json notes = ordered_json::object();
  if (id == "1a") notes["kernel"] = "J(tau) = exp(-(2 pi)^2 |tau| delta), dimensionless, delta = 1";
  if (id == "4") notes["kernel"] = "J(tau) = exp(-delta |tau| / 2)";
  if (id == "5") {
    notes["inset_axis_offset_seconds"] = 2e-12;
    notes["inset_axis_offset"] = "the inset labels tau = 0 at a true delay of 2e-12 s; data keep the true tau";
  }
  return notes;
}

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"1a", "1b", "2", "3", "4", "5", "6", "7"};
  return ids;
}

std::vector<CurveDataset> build_figure(std::string_view id, const RunConfig& config) {
  const double delta = config.scenario.delta;
  if (id == "1a") {
    ordered_json p;
    p["kernel"] = "legacy";
    p["delta"] = 1.0;
    return {single_overlap_curve("fig1a", 0.1, 401, [](double tau) { return legacy_fig1a_kernel(tau, 1.0); },
                                 std::move(p))};
  }
  if (id == "1b") {
    SweepGrid g = base_grid(config, SpectralModel::Gaussian);
    g.base.omegad = g.base.omega0;
    g.base.gamma = delta;
    g.axis = SweepAxis::Tau;
    g.lock_taup_to_tau = true;
    g.start = -10e-12;
    g.stop = 10e-12;
    g.points = 401;
    return {sweep_curve("fig1b", g, config.workers)};
  }
  if (id == "2") return tau_family("fig2", config, SpectralModel::Gaussian);
  if (id == "3") return gamma_family("fig3", config, SpectralModel::Gaussian, 0.0);
  if (id == "4") {
    ordered_json p;
    p["model"] = "lorentzian";
    p["delta"] = delta;
    return {single_overlap_curve("fig4", 10e-12, 401,
                                 [delta](double tau) { return std::exp(-0.5 * delta * std::abs(tau)); },
                                 std::move(p))};
  }
  if (id == "5") return tau_family("fig5", config, SpectralModel::LorentzianCausal);
  if (id == "6") return gamma_family("fig6", config, SpectralModel::LorentzianCausal, 0.0);
  if (id == "7") return gamma_family("fig7", config, SpectralModel::LorentzianCausal, kLorentzianCurveTau);
  throw ConfigError("unknown figure '" + std::string(id) + "' (expected 1a|1b|2|3|4|5|6|7)");
}

std::vector<std::filesystem::path> write_figure(std::string_view id, const RunConfig& config,
                                                const std::filesystem::path& out_dir) {
  const auto begin = std::chrono::steady_clock::now();
  const std::vector<CurveDataset> curves = build_figure(id, config);
  std::vector<std::filesystem::path> written;
  ordered_json meta;
  meta["tool"] = "g2coh";
  meta["version"] = G2COH_VERSION;
  meta["command"] = "figure";
  meta["figure"] = std::string(id);
  meta["config"] = ordered_json::parse(config_to_json(config));
  meta["curves"] = ordered_json::array();
  for (const auto& curve : curves) {
    const auto path = out_dir / (curve.name + ".csv");
    write_text_file(path, to_csv(curve.axis_name, curve.rows));
    written.push_back(path);
    ordered_json entry;
    entry["name"] = curve.name;
    entry["file"] = path.filename().string();
    entry["parameters"] = ordered_json::parse(curve.parameters_json);
    meta["curves"].push_back(std::move(entry));
  }
  meta["notes"] = figure_notes(id);
  meta["wall_time_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
  const auto sidecar = out_dir / ("fig" + std::string(id) + ".meta.json");
  write_text_file(sidecar, meta.dump(2) + "\n");
  written.push_back(sidecar);
  return written;
}

std::vector<std::filesystem::path> write_sweep(const RunConfig& config, const std::filesystem::path& out_dir,
                                               std::string_view stem) {
  const auto begin = std::chrono::steady_clock::now();
  const SweepGrid grid = sweep_grid_from(config);
  const auto records = run_sweep(grid, config.workers);
  const auto csv_path = out_dir / (std::string(stem) + ".csv");
  write_text_file(csv_path, to_csv(to_string(grid.axis), rows_from_records(records)));

  std::size_t failed = 0;
  std::size_t flagged = 0;
  for (const auto& r : records) {
    if (r.failure) ++failed;
    else if (r.g2.flagged()) ++flagged;
  }
  ordered_json meta;
  meta["tool"] = "g2coh";
  meta["version"] = G2COH_VERSION;
  meta["command"] = "sweep";
  meta["config"] = ordered_json::parse(config_to_json(config));
  meta["grid"] = grid_json(grid);
  meta["file"] = csv_path.filename().string();
  meta["failed_points"] = failed;
  meta["flagged_points"] = flagged;
  meta["wall_time_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
  const auto sidecar = out_dir / (std::string(stem) + ".meta.json");
  write_text_file(sidecar, meta.dump(2) + "\n");
  return {csv_path, sidecar};
}

}  // namespace g2coh
