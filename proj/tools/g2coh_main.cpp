// g2coh: second-order coherence of two-photon states seen by finite-bandwidth
// detectors. Subcommands: eval, figure, sweep, validate.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "g2coh/errors.hpp"
#include "g2coh/figures.hpp"
#include "g2coh/g2_core.hpp"
#include "g2coh/run_config.hpp"
#include "g2coh/validation.hpp"

namespace {

constexpr int kExitNumeric = 1;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;

const std::map<std::string, std::string>& field_help() {
  static const std::map<std::string, std::string> help{
      {"model", "spectral model of photons and detectors: gaussian|lorentzian"},
      {"detector_model", "override the detector model only"},
      {"omega0", "photon center frequency [s^-1]"},
      {"delta", "photon bandwidth [s^-1]"},
      {"taup", "source-side photon separation [s]"},
      {"omegad", "detector center frequency [s^-1]"},
      {"gamma", "detector bandwidth [s^-1]"},
      {"tau", "detection delay [s]"},
      {"method", "overlap evaluation: closed_form|quadrature"},
      {"rel_tol", "quadrature relative tolerance"},
      {"half_width", "quadrature core half-width in widths"},
      {"max_doublings", "quadrature domain doublings"},
      {"workers", "sweep threads (0 = hardware concurrency)"},
      {"out", "output directory"},
      {"axis", "sweep axis: tau|gamma|taup|omega_d"},
      {"start", "sweep start"},
      {"stop", "sweep stop"},
      {"points", "sweep points"},
      {"lock_taup", "keep taup equal to tau along a tau sweep (true|false)"},
      {"modes", "Fock-oracle mode count N"},
      {"draws", "random validation scenarios per model"},
      {"seed", "validation corpus seed"},
  };
  return help;
}

// Per-subcommand config source: --config file, then flag overrides.
struct ConfigOptions {
  std::string config_path;
  std::map<std::string, std::string> overrides;

  void attach(CLI::App* app) {
    app->add_option("--config", config_path, "flat JSON config (or a dataset metadata sidecar)");
    for (const auto& name : g2coh::field_names()) {
      app->add_option_function<std::string>(
          "--" + name, [this, name](const std::string& v) { overrides[name] = v; }, field_help().at(name));
    }
  }

  g2coh::RunConfig resolve() const {
    g2coh::RunConfig config;
    if (!config_path.empty()) config = g2coh::load_config_file(config_path);
    // "model" first so that an explicit detector_model still wins.
    for (const auto& name : g2coh::field_names()) {
      const auto it = overrides.find(name);
      if (it != overrides.end()) g2coh::apply_field(config, name, it->second);
    }
    g2coh::validate(config);
    return config;
  }
};

void print_eval(const g2coh::RunConfig& config) {
  const g2coh::OverlapSet overlaps =
      g2coh::compute_overlap_set(config.scenario, config.method, config.quadrature);
  const g2coh::G2Result r = g2coh::g2_from_overlaps(overlaps);
  const auto mags = overlaps.magnitudes();
  std::printf("g2          %.17g\n", r.value);
  std::printf("numerator   %.17g\n", r.numerator);
  std::printf("denominator %.17g\n", r.denominator);
  std::printf("scale       %.17g\n", r.scale);
  for (std::size_t k = 0; k < mags.size(); ++k) {
    std::printf("absJ%zu       %.17g\n", k + 1, mags[k]);
  }
  const std::string flags = g2coh::flags_to_string(r.flags);
  std::printf("flags       %s\n", flags.empty() ? "-" : flags.c_str());
}

int run_validate(const g2coh::RunConfig& config, bool corrupt) {
  g2coh::ValidationOptions options;
  options.modes = config.modes;
  options.draws = config.draws;
  options.seed = config.seed;
  options.quadrature = config.quadrature;
  options.corrupt_closed_form = corrupt;
  const g2coh::ValidationReport report = g2coh::run_validation(options);
  std::cout << report.table();
  if (report.passed()) return 0;
  for (const auto& check : report.checks) {
    if (!check.passed() && check.worst) {
      std::cout << "offending scenario (" << check.name << "): " << g2coh::scenario_to_json(*check.worst) << '\n';
    }
  }
  return kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"g2coh: second-order coherence of two photons under finite-bandwidth detection"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(G2COH_VERSION_STRING));

  ConfigOptions eval_opts, figure_opts, sweep_opts, validate_opts;

  auto* eval = app.add_subcommand("eval", "evaluate g2 and the six overlaps for one scenario");
  eval_opts.attach(eval);

  auto* figure = app.add_subcommand("figure", "write the datasets of one figure (CSV + metadata)");
  std::string which;
  figure->add_option("which", which, "figure id: 1a|1b|2|3|4|5|6|7")->required();
  figure_opts.attach(figure);

  auto* sweep = app.add_subcommand("sweep", "sweep one parameter and write CSV + metadata");
  std::string stem = "sweep";
  sweep->add_option("--stem", stem, "output file stem");
  sweep_opts.attach(sweep);

  auto* validate = app.add_subcommand("validate", "cross-check closed forms, quadrature and the Fock oracle");
  bool corrupt = false;
  validate->add_flag("--corrupt-closed-form", corrupt, "negative control")->group("");
  validate_opts.attach(validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*eval) {
      print_eval(eval_opts.resolve());
    } else if (*figure) {
      const auto config = figure_opts.resolve();
      for (const auto& path : g2coh::write_figure(which, config, config.out)) std::cout << path.string() << '\n';
    } else if (*sweep) {
      const auto config = sweep_opts.resolve();
      for (const auto& path : g2coh::write_sweep(config, config.out, stem)) std::cout << path.string() << '\n';
    } else if (*validate) {
      return run_validate(validate_opts.resolve(), corrupt);
    }
  } catch (const g2coh::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const g2coh::Error& e) {
    // Config, domain and unsupported-method errors are all usage problems.
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return 0;
}
