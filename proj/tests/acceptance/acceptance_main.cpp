// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances are the contractual ones.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "g2coh/dataset_io.hpp"
#include "g2coh/figures.hpp"
#include "g2coh/fock_oracle.hpp"
#include "g2coh/g2_core.hpp"
#include "g2coh/overlap_engine.hpp"
#include "g2coh/sweep_analysis.hpp"
#include "g2coh/validation.hpp"

using namespace g2coh;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 20130826;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buffer[256];
  std::snprintf(buffer, sizeof buffer, pattern, a, b, c);
  return buffer;
}

ScenarioSpec fig2_base(double gamma, double taup) {
  return ScenarioSpec::uniform(SpectralModel::Gaussian, 5e14, 1e12, taup, 4.5e14, gamma, 0.0);
}

double max_usable(const std::vector<SweepRecord>& records) {
  double best = -INFINITY;
  for (const auto& r : records) {
    if (r.usable()) best = std::max(best, r.g2.value);
  }
  return best;
}

std::vector<SweepRecord> tau_sweep(const ScenarioSpec& base) {
  SweepGrid g;
  g.base = base;
  g.axis = SweepAxis::Tau;
  g.start = -20e-12;
  g.stop = 20e-12;
  g.points = 801;
  return run_sweep(g);
}

std::vector<SweepRecord> gamma_sweep(const ScenarioSpec& base) {
  SweepGrid g;
  g.base = base;
  g.axis = SweepAxis::Gamma;
  g.start = 0.0;
  g.stop = 5e12;
  g.points = 500;
  return run_sweep(g);
}

// ---------------------------------------------------------------------------

Outcome endpoints() {
  const double at0 = std::abs(g2_from_single_J(0.0) - 1.0);
  const double at1 = std::abs(g2_from_single_J(1.0) - 0.5);
  const double half = std::abs(g2_from_single_J(0.5) - 125.0 / 196.0);
  return {std::max({at0, at1, half}) < 1e-12,
          fmt("|g2(0)-1|=%.1e |g2(1)-1/2|=%.1e |g2(1/2)-125/196|=%.1e", at0, at1, half)};
}

Outcome flatness() {
  const double h = 1e-6;
  const double d0 = std::abs(g2_from_single_J(h) - g2_from_single_J(0.0)) / h;
  const double d1 = std::abs(g2_from_single_J(1.0) - g2_from_single_J(1.0 - h)) / h;
  return {d0 < 1e-4 && d1 < 1e-4, fmt("|dg2/d|J|| at 0: %.1e, at 1: %.1e (h=1e-6)", d0, d1)};
}

Outcome reduction() {
  double worst = 0.0;
  int count = 0;
  for (auto model : {SpectralModel::Gaussian, SpectralModel::LorentzianCausal}) {
    for (ScenarioSpec s : random_corpus(model, 25, kSeed + 3)) {
      s.omegad = s.omega0;
      s.gamma = s.delta;
      s.tau = s.taup;
      worst = std::max(worst, assert_reduction(s));
      ++count;
    }
  }
  return {count == 50 && worst < 1e-9, fmt("%g matched scenarios, max deviation %.2e", count, worst)};
}

Outcome simultaneous_emission() {
  double worst = 0.0;
  int count = 0;
  for (auto model : {SpectralModel::Gaussian, SpectralModel::LorentzianCausal}) {
    for (int a = 0; a < 20; ++a) {
      for (int b = 0; b < 20; ++b) {
        const double gamma = 0.25e12 + (5e12 - 0.25e12) * a / 19.0;
        const double tau = -20e-12 + 40e-12 * b / 19.0;
        const auto s = ScenarioSpec::uniform(model, 5e14, 1e12, 0.0, 4.5e14, gamma, tau);
        const double dev = std::abs(evaluate_g2(s).value - 0.5);
        worst = std::isnan(dev) ? INFINITY : std::max(worst, dev);
        ++count;
      }
    }
  }
  return {worst < 1e-9, fmt("%g points (20x20 gamma x tau, both models), max |g2-1/2| %.2e", count, worst)};
}

Outcome matched_curve() {
  auto at = [](double t) {
    return evaluate_g2(ScenarioSpec::uniform(SpectralModel::Gaussian, 5e14, 1e12, t, 5e14, 1e12, t)).value;
  };
  const double g0 = at(0.0);
  const double g5 = at(5e-12);
  // The emitted figure curve must agree with the direct evaluation.
  double curve_dev = 0.0;
  const auto figure = build_figure("1b", RunConfig{});
  for (const auto& row : figure.at(0).rows) {
    curve_dev = std::max(curve_dev, std::abs(row.g2 - at(row.axis_value)));
  }
  return {std::abs(g0 - 0.5) < 1e-9 && std::abs(g5 - 1.0) < 1e-3 && curve_dev == 0.0,
          fmt("g2(0)=%.12f g2(5e-12)=%.9f dataset deviation %.1e", g0, g5, curve_dev)};
}

Outcome lorentzian_closed_forms() {
  double worst = 0.0;
  double j1 = 0.0;
  for (const auto& s : random_corpus(SpectralModel::LorentzianCausal, 20, kSeed + 6)) {
    const OverlapSet closed = lorentzian_overlap_set(s);
    const OverlapSet numeric = compute_overlap_set(s, OverlapMethod::Quadrature);
    for (int k = 1; k <= 6; ++k) {
      worst = std::max(worst, std::abs(closed.J(k) - numeric.J(k)) / std::abs(numeric.J(k)));
    }
    j1 = std::max(j1, std::abs(std::abs(closed.J(1)) - std::exp(-0.5 * s.delta * std::abs(s.taup))));
  }
  return {worst < 1e-8 && j1 < 1e-12,
          fmt("20 scenarios: max relative |closed-quadrature| %.2e; max ||J1|-exp(-D|taup|/2)| %.1e", worst, j1)};
}

Outcome fock_equivalence() {
  double worst = 0.0;
  int used = 0;
  for (auto model : {SpectralModel::Gaussian, SpectralModel::LorentzianCausal}) {
    int taken = 0;
    for (const auto& s : random_corpus(model, 60, kSeed + 7)) {
      if (taken == 30) break;
      const G2Result analytic = evaluate_g2(s);
      if (analytic.has(G2Flag::DenominatorNearZero)) continue;
      const G2Result oracle = oracle_g2(s, 2048);
      worst = std::max(worst, std::abs(oracle.value - analytic.value) / std::max(analytic.value, 1e-6));
      ++taken;
    }
    used += taken;
  }
  double moments = 0.0;
  for (auto model : {SpectralModel::Gaussian, SpectralModel::LorentzianCausal}) {
    for (double taup : {0.0, 0.5e-12, 1.5e-12, 3e-12}) {
      const auto s = ScenarioSpec::uniform(model, 5e14, 1e12, taup, 5e14, 1e12, taup);
      const double J = std::abs(compute_overlap_set(s, OverlapMethod::ClosedForm).J(1));
      const auto expected = single_overlap_moments(J);
      const OracleMoments got = oracle_moments(s, 2048);
      moments = std::max({moments, std::abs(got.numerator / expected.numerator - 1.0),
                          std::abs(got.denominator / expected.denominator - 1.0)});
    }
  }
  return {used == 60 && worst < 1e-2 && moments < 2e-3,
          fmt("N=2048, %g scenarios: max relative deviation %.2e; moments max relative %.2e", used, worst, moments)};
}

Outcome bunching_switch() {
  double at077 = -INFINITY, at1 = -INFINITY;
  for (double taup : {0.0, 1.5e-12, 2.5e-12, 5e-12, 10e-12}) {
    at077 = std::max(at077, max_usable(tau_sweep(fig2_base(0.77e12, taup))));
    at1 = std::max(at1, max_usable(tau_sweep(fig2_base(1e12, taup))));
  }
  return {at077 > 1.0 && at1 <= 1.0 + 1e-9,
          fmt("max g2 over tau and five taup: %.6f at gamma=0.77e12, %.12f at gamma=1e12", at077, at1)};
}

Outcome oscillations() {
  auto count = [](double omegad) {
    ScenarioSpec s = ScenarioSpec::uniform(SpectralModel::Gaussian, 5e14, 1e12, 2.5e-12, omegad, 1e12, 0.0);
    return analyze_extrema(gamma_sweep(s)).oscillation_count;
  };
  const std::vector<double> omegads{4.9e14, 4.875e14, 4.75e14, 4.5e14};  // increasing mismatch
  std::vector<std::size_t> counts;
  for (double w : omegads) counts.push_back(count(w));
  const bool monotone = std::is_sorted(counts.begin(), counts.end());
  std::ostringstream detail;
  detail << "interior maxima at omega_d = 4.9/4.875/4.75/4.5e14: " << counts[0] << '/' << counts[1] << '/'
         << counts[2] << '/' << counts[3];
  return {counts[1] == 1 && counts[3] >= 2 && monotone, detail.str()};
}

Outcome magnitude_windows() {
  auto peak = [](double taup) {
    double best = -INFINITY;
    for (const auto& gamma_point : gamma_sweep(fig2_base(1e12, taup))) {
      best = std::max(best, max_usable(tau_sweep(fig2_base(gamma_point.axis_value, taup))));
    }
    return best;
  };
  const double p12 = peak(1e-12);
  const double p13 = peak(1e-13);
  return {p12 >= 1.0 && p12 <= 100.0 && p13 >= 1e3 && p13 <= 1e5,
          fmt("max g2 over gamma and tau: %.4g (taup=1e-12, window [1,100]), %.4g (taup=1e-13, window [1e3,1e5])",
              p12, p13)};
}

Outcome gauge() {
  std::mt19937_64 rng(kSeed + 11);
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const auto scenarios = [] {
    auto g = random_corpus(SpectralModel::Gaussian, 50, kSeed + 11);
    const auto l = random_corpus(SpectralModel::LorentzianCausal, 50, kSeed + 11);
    g.insert(g.end(), l.begin(), l.end());
    return g;
  }();
  double worst = 0.0;
  for (const auto& s : scenarios) {
    const OverlapSet base = compute_overlap_set(s, OverlapMethod::ClosedForm);
    const double g = g2_from_overlaps(base).value;
    std::array<double, 4> phases{};
    for (auto& p : phases) p = 2.0 * std::numbers::pi * unit();
    const double turned = g2_from_overlaps(rephase(base, phases)).value;
    worst = std::max(worst, std::abs(turned - g) / std::max(1.0, g));
  }
  return {worst < 1e-12, fmt("100 trials, max |delta g2| / max(1, g2) = %.2e", worst)};
}

bool same_files(const std::vector<fs::path>& a, const std::vector<fs::path>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].extension() != ".csv") continue;
    if (read_text_file(a[k]) != read_text_file(b[k])) return false;
  }
  return true;
}

std::vector<fs::path> csv_files(const fs::path& dir) {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".csv") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Outcome determinism() {
  const fs::path root = fs::temp_directory_path() / "g2coh_acceptance_determinism";
  fs::remove_all(root);
  std::size_t compared = 0;
  bool identical = true;
#ifdef G2COH_CLI_PATH
  const std::string cli = G2COH_CLI_PATH;
  const std::vector<std::string> runs{
      "figure 2", "figure 3", "figure 6",
      "sweep --axis gamma --start 0 --stop 5e12 --points 500 --taup 2.5e-12 --omegad 4.875e14",
      "sweep --model lorentzian --axis tau --start -2e-11 --stop 2e-11 --points 401 --taup 1.5e-12"};
  for (std::size_t r = 0; r < runs.size(); ++r) {
    std::vector<std::vector<fs::path>> outputs;
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path dir = root / ("run" + std::to_string(r) + "_" + std::to_string(rep));
      const std::string cmd = "\"" + cli + "\" " + runs[r] + " --workers " + std::to_string(rep == 0 ? 1 : 4) +
                              " --out \"" + dir.string() + "\" > /dev/null";
      if (std::system(cmd.c_str()) != 0) return {false, "command failed: " + cmd};
      outputs.push_back(csv_files(dir));
    }
    identical = identical && !outputs[0].empty() && same_files(outputs[0], outputs[1]);
    compared += outputs[0].size();
  }
  const std::string route = "CLI";
#else
  for (const char* id : {"2", "3", "6"}) {
    RunConfig c;
    c.workers = 1;
    const auto a = write_figure(id, c, root / (std::string(id) + "_a"));
    c.workers = 4;
    const auto b = write_figure(id, c, root / (std::string(id) + "_b"));
    identical = identical && same_files(a, b);
    compared += a.size() - 1;
  }
  const std::string route = "library";
#endif
  fs::remove_all(root);
  return {identical && compared > 0,
          "repeated figure and sweep runs (" + route + ", 1 vs 4 workers): " + std::to_string(compared) +
              " CSV files byte-identical: " + (identical ? "yes" : "no")};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "single-overlap endpoints", endpoints},
      {2, "endpoint flatness", flatness},
      {3, "reduction to the single-overlap formula", reduction},
      {4, "simultaneous-emission universality", simultaneous_emission},
      {5, "matched-detector curve shape", matched_curve},
      {6, "Lorentzian closed forms vs quadrature", lorentzian_closed_forms},
      {7, "Fock-oracle equivalence", fock_equivalence},
      {8, "bunching switch", bunching_switch},
      {9, "oscillations in gamma", oscillations},
      {10, "magnitude regimes", magnitude_windows},
      {11, "gauge invariance", gauge},
      {12, "determinism", determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("[%s] criterion %2d: %s -- %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
