#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "g2coh/dataset_io.hpp"
#include "g2coh/run_config.hpp"

namespace g2coh {

/// "1a", "1b", "2", ..., "7".
const std::vector<std::string>& figure_ids();

struct CurveDataset {
  std::string name;       // file stem, e.g. "fig2_taup1.5e-12_gamma7.7e+11"
  std::string axis_name;  // "tau", "gamma", ...
  std::vector<DatasetRow> rows;
  std::string parameters_json;  // curve parameters for the sidecar
};

/// Computes every curve of a figure. The scenario center frequency, photon
/// width, method, quadrature settings and worker count come from the config;
/// everything else is fixed by the figure definition.
/// Throws ConfigError for an unknown id.
std::vector<CurveDataset> build_figure(std::string_view id, const RunConfig& config);

/// Writes one CSV per curve and a fig<id>.meta.json sidecar into out_dir.
/// Returns the written paths (sidecar last).
std::vector<std::filesystem::path> write_figure(std::string_view id, const RunConfig& config,
                                                const std::filesystem::path& out_dir);

/// Writes <stem>.csv and <stem>.meta.json for an arbitrary sweep.
std::vector<std::filesystem::path> write_sweep(const RunConfig& config,
                                               const std::filesystem::path& out_dir,
                                               std::string_view stem = "sweep");

}  // namespace g2coh
