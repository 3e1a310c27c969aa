#include "g2coh/overlap_engine.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "g2coh/errors.hpp"

namespace g2coh {
namespace {

using cdouble = std::complex<double>;

// (x, y) operator indices of J1..J6 over the ordering (i, j, d1, d2).
constexpr std::array<std::pair<int, int>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

std::array<WavepacketSpec, 4> operators_of(const ScenarioSpec& s) {
  return {s.photon_i(), s.photon_j(), s.detection_1(), s.detection_2()};
}

// Bracketed factor of the causal identity. Both branches are kept at tau = 0
// with weight 1/2 each.
cdouble causal_branch(double omega1, double omega2, double width1, double width2, double tau) {
  cdouble value{0.0, 0.0};
  const double forward = tau > 0.0 ? 1.0 : (tau == 0.0 ? 0.5 : 0.0);
  const double backward = tau < 0.0 ? 1.0 : (tau == 0.0 ? 0.5 : 0.0);
  if (forward > 0.0) value += forward * std::polar(std::exp(-0.5 * width1 * tau), -omega1 * tau);
  if (backward > 0.0) value += backward * std::polar(std::exp(0.5 * width2 * tau), -omega2 * tau);
  return value;
}

}  // namespace

std::string_view to_string(OverlapMethod method) {
  switch (method) {
    case OverlapMethod::ClosedForm:
      return "closed_form";
    case OverlapMethod::Quadrature:
      return "quadrature";
  }
  return "unknown";
}

OverlapMethod parse_overlap_method(std::string_view text) {
  if (text == "closed_form" || text == "closed-form") return OverlapMethod::ClosedForm;
  if (text == "quadrature") return OverlapMethod::Quadrature;
  throw DomainError("unknown overlap method '" + std::string(text) + "' (expected closed_form|quadrature)");
}

std::array<double, 6> OverlapSet::magnitudes() const {
  std::array<double, 6> out{};
  for (std::size_t k = 0; k < values.size(); ++k) out[k] = std::abs(values[k]);
  return out;
}

cdouble gaussian_cross_overlap(const WavepacketSpec& a, const WavepacketSpec& b) {
  const double wa2 = a.width * a.width;
  const double wb2 = b.width * b.width;
  const double sum = wa2 + wb2;
  const double detuning = b.center_frequency - a.center_frequency;
  const double dt = a.time - b.time;
  const double magnitude = std::sqrt(2.0 * a.width * b.width / sum) *
                           std::exp(-detuning * detuning / (4.0 * sum) - dt * dt * wa2 * wb2 / sum);
  const double phase = detuning * (a.time * wa2 + b.time * wb2) / sum;
  return std::polar(magnitude, phase);
}

cdouble lorentzian_cross_overlap(double omega1, double omega2, double width1, double width2, double tau) {
  const cdouble prefactor =
      std::sqrt(width1 * width2) / cdouble(0.5 * (width1 + width2), omega1 - omega2);
  return prefactor * causal_branch(omega1, omega2, width1, width2, tau);
}

cdouble overlap_closed_form(const WavepacketSpec& a, const WavepacketSpec& b) {
  validate(a);
  validate(b);
  if (a.model != b.model) {
    throw UnsupportedMethodError("closed form: no closed form for a mixed Gaussian/Lorentzian pair");
  }
  if (a.model == SpectralModel::Gaussian) return gaussian_cross_overlap(a, b);
  return lorentzian_cross_overlap(a.center_frequency, b.center_frequency, a.width, b.width, a.time - b.time);
}

cdouble lorentzian_contact_constant(const ScenarioSpec& s) {
  return std::sqrt(s.delta * s.gamma) / cdouble(0.5 * (s.delta + s.gamma), s.omega0 - s.omegad);
}

OverlapSet lorentzian_overlap_set(const ScenarioSpec& s) {
  if (s.photon_model != SpectralModel::LorentzianCausal || s.detector_model != SpectralModel::LorentzianCausal) {
    throw UnsupportedMethodError("lorentzian_overlap_set: both models must be lorentzian");
  }
  validate(s);
  const cdouble contact = lorentzian_contact_constant(s);
  OverlapSet out;
  out.method = OverlapMethod::ClosedForm;
  out.scenario = s;
  // J1: the later photon j lags i by taup.
  out.J(1) = causal_branch(s.omega0, s.omega0, s.delta, s.delta, -s.taup);
  // J2: both start at t = 0, so the two half-weighted branches add to one.
  out.J(2) = contact;
  out.J(3) = contact * causal_branch(s.omega0, s.omegad, s.delta, s.gamma, -s.tau);
  out.J(4) = contact * causal_branch(s.omega0, s.omegad, s.delta, s.gamma, s.taup);
  out.J(5) = contact * causal_branch(s.omega0, s.omegad, s.delta, s.gamma, s.taup - s.tau);
  out.J(6) = lorentzian_cross_overlap(s.omegad, s.omegad, s.gamma, s.gamma, -s.tau);
  return out;
}

OverlapSet compute_overlap_set(const ScenarioSpec& scenario, OverlapMethod method,
                               const QuadratureSettings& settings) {
  validate(scenario);
  if (method == OverlapMethod::ClosedForm) {
    if (!scenario.single_model()) {
      throw UnsupportedMethodError("closed form: photon and detector models differ; use quadrature");
    }
    if (scenario.photon_model == SpectralModel::LorentzianCausal) return lorentzian_overlap_set(scenario);
  }
  const auto ops = operators_of(scenario);
  OverlapSet out;
  out.method = method;
  out.scenario = scenario;
  for (std::size_t k = 0; k < kPairs.size(); ++k) {
    const auto& a = ops[static_cast<std::size_t>(kPairs[k].first)];
    const auto& b = ops[static_cast<std::size_t>(kPairs[k].second)];
    out.values[k] = method == OverlapMethod::ClosedForm ? gaussian_cross_overlap(a, b)
                                                        : overlap_quadrature(a, b, settings);
  }
  return out;
}

OverlapSet rephase(const OverlapSet& overlaps, const std::array<double, 4>& phases) {
  OverlapSet out = overlaps;
  for (std::size_t k = 0; k < kPairs.size(); ++k) {
    const double shift = phases[static_cast<std::size_t>(kPairs[k].first)] -
                         phases[static_cast<std::size_t>(kPairs[k].second)];
    out.values[k] *= std::polar(1.0, shift);
  }
  return out;
}

double legacy_fig1a_kernel(double tau, double width) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return std::exp(-two_pi * two_pi * std::abs(tau) * width);
}

}  // namespace g2coh
