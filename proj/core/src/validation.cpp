#include "g2coh/validation.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "g2coh/errors.hpp"
#include "g2coh/fock_oracle.hpp"
#include "g2coh/g2_core.hpp"
#include "g2coh/overlap_engine.hpp"

namespace g2coh {
namespace {

// Below this magnitude overlap deviations are measured absolutely.
constexpr double kOverlapFloor = 1e-6;

double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_draw(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * unit_draw(rng); }

void record(ValidationCheck& check, double deviation, const ScenarioSpec& s) {
  ++check.evaluated;
  const double d = std::isnan(deviation) ? std::numeric_limits<double>::infinity() : deviation;
  if (!check.worst || d > check.max_deviation) {
    check.max_deviation = d;
    check.worst = s;
  }
}

OverlapSet closed_form(const ScenarioSpec& s, bool corrupt) {
  OverlapSet set = compute_overlap_set(s, OverlapMethod::ClosedForm);
  if (corrupt) set.J(3) *= 1.0 + 1e-6;
  return set;
}

}  // namespace

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed(); });
}

std::string ValidationReport::table() const {
  std::ostringstream out;
  out << std::left << std::setw(28) << "check" << std::right << std::setw(14) << "max_dev" << std::setw(12)
      << "tolerance" << std::setw(8) << "n" << std::setw(9) << "skipped" << "  verdict\n";
  for (const auto& c : checks) {
    out << std::left << std::setw(28) << c.name << std::right << std::scientific << std::setprecision(3)
        << std::setw(14) << c.max_deviation << std::setw(12) << c.tolerance << std::defaultfloat << std::setw(8)
        << c.evaluated << std::setw(9) << c.skipped << "  " << (c.passed() ? "pass" : "FAIL") << '\n';
  }
  out << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::vector<ScenarioSpec> acceptance_corpus() {
  using M = SpectralModel;
  return {
      ScenarioSpec::uniform(M::Gaussian, 5e14, 1e12, 0.0, 4.5e14, 1e12, 0.0),
      ScenarioSpec::uniform(M::Gaussian, 5e14, 1e12, 2.5e-12, 4.5e14, 0.77e12, 1e-12),
      ScenarioSpec::uniform(M::Gaussian, 5e14, 1e12, 1.5e-12, 5e14, 1e12, 1.5e-12),
      ScenarioSpec::uniform(M::Gaussian, 5e14, 1e12, 1e-12, 5e14 + 1e12, 1.5e12, -2e-12),
      ScenarioSpec::uniform(M::LorentzianCausal, 5e14, 1e12, 2e-12, 5e14, 1e12, 2e-12),
      ScenarioSpec::uniform(M::LorentzianCausal, 5e14, 1e12, 0.0, 5e14 + 2e12, 0.77e12, 1e-12),
      ScenarioSpec::uniform(M::LorentzianCausal, 5e14, 1.2e12, 3e-12, 5e14 - 1e12, 0.8e12, -1.5e-12),
  };
}

std::vector<ScenarioSpec> random_corpus(SpectralModel model, std::size_t draws, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ (model == SpectralModel::Gaussian ? 0x9e3779b97f4a7c15ULL : 0xc2b2ae3d27d4eb4fULL));
  std::vector<ScenarioSpec> out;
  out.reserve(draws);
  for (std::size_t k = 0; k < draws; ++k) {
    const double delta = uniform_draw(rng, 0.5e12, 2e12);
    const double gamma = uniform_draw(rng, 0.5e12, 2e12);
    const double detuning = uniform_draw(rng, -3e12, 3e12);
    const double taup = uniform_draw(rng, -5e-12, 5e-12);
    const double tau = uniform_draw(rng, -5e-12, 5e-12);
    out.push_back(ScenarioSpec::uniform(model, 5e14, delta, taup, 5e14 + detuning, gamma, tau));
  }
  return out;
}

ValidationReport run_validation(const ValidationOptions& options) {
  std::vector<ScenarioSpec> corpus = acceptance_corpus();
  for (const auto model : {SpectralModel::Gaussian, SpectralModel::LorentzianCausal}) {
    const auto extra = random_corpus(model, options.draws, options.seed);
    corpus.insert(corpus.end(), extra.begin(), extra.end());
  }

  auto make_check = [](std::string name, double tolerance) {
    ValidationCheck c;
    c.name = std::move(name);
    c.tolerance = tolerance;
    return c;
  };
  ValidationCheck quadrature = make_check("closed_form_vs_quadrature", kClosedFormTolerance);
  ValidationCheck oracle = make_check("analytic_vs_fock_oracle", kOracleTolerance);
  ValidationCheck gauge = make_check("gauge_invariance", kGaugeTolerance);

  std::mt19937_64 phase_rng(options.seed);
  for (const auto& s : corpus) {
    const OverlapSet closed = closed_form(s, options.corrupt_closed_form);
    const OverlapSet numeric = compute_overlap_set(s, OverlapMethod::Quadrature, options.quadrature);
    double worst = 0.0;
    for (std::size_t k = 0; k < 6; ++k) {
      const double ref = std::max(std::abs(numeric.values[k]), kOverlapFloor);
      worst = std::max(worst, std::abs(closed.values[k] - numeric.values[k]) / ref);
    }
    record(quadrature, worst, s);

    const G2Result analytic = g2_from_overlaps(closed);
    if (analytic.has(G2Flag::DenominatorNearZero)) {
      ++oracle.skipped;
      ++gauge.skipped;
      continue;
    }
    try {
      const G2Result brute = oracle_g2(s, options.modes);
      record(oracle, std::abs(brute.value - analytic.value) / std::max(analytic.value, 1e-6), s);
    } catch (const NumericError&) {
      // The grid cannot resolve this scenario at the requested mode count.
      ++oracle.skipped;
    }

    std::array<double, 4> phases{};
    for (auto& p : phases) p = 2.0 * std::numbers::pi * unit_draw(phase_rng);
    const G2Result turned = g2_from_overlaps(rephase(closed, phases));
    record(gauge, std::abs(turned.value - analytic.value) / std::max(1.0, std::abs(analytic.value)), s);
  }

  ValidationReport report;
  report.checks = {quadrature, oracle, gauge};
  return report;
}

std::string scenario_to_json(const ScenarioSpec& s) {
  nlohmann::ordered_json j;
  j["model"] = std::string(to_string(s.photon_model));
  j["detector_model"] = std::string(to_string(s.detector_model));
  j["omega0"] = s.omega0;
  j["delta"] = s.delta;
  j["taup"] = s.taup;
  j["omegad"] = s.omegad;
  j["gamma"] = s.gamma;
  j["tau"] = s.tau;
  return j.dump();
}

}  // namespace g2coh
