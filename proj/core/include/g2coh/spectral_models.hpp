#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <numbers>
#include <string>
#include <string_view>

#include "g2coh/errors.hpp"

namespace g2coh {

struct QuadratureSettings;

enum class SpectralModel { Gaussian, LorentzianCausal };

std::string_view to_string(SpectralModel model);
/// Accepts "gaussian" and "lorentzian" (also "lorentzian_causal").
SpectralModel parse_spectral_model(std::string_view text);

/// One emitter or detector spectral amplitude. Frequencies and widths are in
/// s^-1, taken literally (no 2*pi conversion); time in seconds.
struct WavepacketSpec {
  SpectralModel model = SpectralModel::Gaussian;
  double center_frequency = 0.0;
  double width = 0.0;
  double time = 0.0;

  friend bool operator==(const WavepacketSpec&, const WavepacketSpec&) = default;
};

/// Throws DomainError unless width > 0, center_frequency > 0 and all fields
/// are finite.
void validate(const WavepacketSpec& spec);

/// Two photons (i, j) sharing omega0/delta and separated by taup, observed by
/// two detections (1, 2) sharing omegad/gamma and separated by tau. The first
/// photon and the first detection sit at t = 0.
struct ScenarioSpec {
  SpectralModel photon_model = SpectralModel::Gaussian;
  SpectralModel detector_model = SpectralModel::Gaussian;
  double omega0 = 5e14;
  double delta = 1e12;
  double taup = 0.0;
  double omegad = 4.5e14;
  double gamma = 1e12;
  double tau = 0.0;

  WavepacketSpec photon_i() const { return {photon_model, omega0, delta, 0.0}; }
  WavepacketSpec photon_j() const { return {photon_model, omega0, delta, taup}; }
  WavepacketSpec detection_1() const { return {detector_model, omegad, gamma, 0.0}; }
  WavepacketSpec detection_2() const { return {detector_model, omegad, gamma, tau}; }

  bool single_model() const { return photon_model == detector_model; }

  /// Same model for photons and detectors.
  static ScenarioSpec uniform(SpectralModel model, double omega0, double delta, double taup,
                              double omegad, double gamma, double tau) {
    return {model, model, omega0, delta, taup, omegad, gamma, tau};
  }

  friend bool operator==(const ScenarioSpec&, const ScenarioSpec&) = default;
};

void validate(const ScenarioSpec& scenario);

// The amplitude of every model factors as envelope(w) * exp(i*(slope*w + offset)).
// Gaussian:   (2 pi D^2)^(-1/4) exp[-(w0-w)^2/(4 D^2)] * exp[-i (w0-w) t]
// Lorentzian: i sqrt(D/2pi) / (w - w0 + i D/2)         * exp[-i w t]

template <std::floating_point T>
std::complex<T> spectral_envelope(const WavepacketSpec& spec, T omega) {
  const T center = static_cast<T>(spec.center_frequency);
  const T width = static_cast<T>(spec.width);
  const T pi = std::numbers::pi_v<T>;
  if (spec.model == SpectralModel::Gaussian) {
    const T detuning = center - omega;
    const T norm = std::pow(T(2) * pi * width * width, T(-0.25));
    return {norm * std::exp(-detuning * detuning / (T(4) * width * width)), T(0)};
  }
  const std::complex<T> pole_distance(omega - center, width / T(2));
  return std::complex<T>(T(0), std::sqrt(width / (T(2) * pi))) / pole_distance;
}

inline double phase_slope(const WavepacketSpec& spec) {
  return spec.model == SpectralModel::Gaussian ? spec.time : -spec.time;
}

inline double phase_offset(const WavepacketSpec& spec) {
  return spec.model == SpectralModel::Gaussian ? -spec.center_frequency * spec.time : 0.0;
}

/// Spectral amplitude alpha(omega) in s^(1/2). Throws DomainError for
/// non-finite omega.
template <std::floating_point T>
std::complex<T> amplitude(const WavepacketSpec& spec, T omega) {
  if (!std::isfinite(omega)) throw DomainError("amplitude: non-finite frequency");
  const T t = static_cast<T>(spec.time);
  T phase;
  if (spec.model == SpectralModel::Gaussian) {
    phase = -(static_cast<T>(spec.center_frequency) - omega) * t;
  } else {
    phase = -omega * t;
  }
  return spectral_envelope(spec, omega) * std::polar(T(1), phase);
}

/// Time-domain profile g(u) of the causal model, defined through
/// alpha(omega) = integral du exp(i omega u) g(u), so that overlaps obey
/// integral alpha_a alpha_b^* domega = 2 pi integral g_a g_b^* du.
/// g(u) = sqrt(D/2pi) theta(u + t) exp[-(i w0 + D/2)(u + t)], theta(0) = 1/2.
template <std::floating_point T>
std::complex<T> causal_time_profile(const WavepacketSpec& spec, T u) {
  if (spec.model != SpectralModel::LorentzianCausal) {
    throw UnsupportedMethodError("causal_time_profile: defined for the causal Lorentzian model only");
  }
  if (!std::isfinite(u)) throw DomainError("causal_time_profile: non-finite time");
  const T elapsed = u + static_cast<T>(spec.time);
  if (elapsed < T(0)) return {T(0), T(0)};
  const T width = static_cast<T>(spec.width);
  const T step = elapsed == T(0) ? T(0.5) : T(1);
  const T magnitude = step * std::sqrt(width / (T(2) * std::numbers::pi_v<T>)) *
                      std::exp(-width * elapsed / T(2));
  return std::polar(magnitude, -static_cast<T>(spec.center_frequency) * elapsed);
}

/// |integral |alpha|^2 domega - 1| under the reference quadrature.
double check_normalization(const WavepacketSpec& spec);
double check_normalization(const WavepacketSpec& spec, const QuadratureSettings& settings);

}  // namespace g2coh
