#include "g2coh/spectral_models.hpp"

#include <cmath>
#include <string>

#include "g2coh/quadrature.hpp"

namespace g2coh {

std::string_view to_string(SpectralModel model) {
  switch (model) {
    case SpectralModel::Gaussian:
      return "gaussian";
    case SpectralModel::LorentzianCausal:
      return "lorentzian";
  }
  return "unknown";
}

SpectralModel parse_spectral_model(std::string_view text) {
  if (text == "gaussian") return SpectralModel::Gaussian;
  if (text == "lorentzian" || text == "lorentzian_causal") return SpectralModel::LorentzianCausal;
  throw DomainError("unknown spectral model '" + std::string(text) + "' (expected gaussian|lorentzian)");
}

void validate(const WavepacketSpec& spec) {
  if (!std::isfinite(spec.center_frequency) || !std::isfinite(spec.width) || !std::isfinite(spec.time)) {
    throw DomainError("wavepacket: non-finite field");
  }
  if (spec.width <= 0.0) throw DomainError("wavepacket: width must be > 0");
  if (spec.center_frequency <= 0.0) throw DomainError("wavepacket: center frequency must be > 0");
}

void validate(const ScenarioSpec& scenario) {
  validate(scenario.photon_i());
  validate(scenario.photon_j());
  validate(scenario.detection_1());
  validate(scenario.detection_2());
}

double check_normalization(const WavepacketSpec& spec) {
  return check_normalization(spec, QuadratureSettings{});
}

double check_normalization(const WavepacketSpec& spec, const QuadratureSettings& settings) {
  validate(spec);
  const std::complex<double> norm = overlap_quadrature(spec, spec, settings);
  return std::abs(norm - 1.0);
}

}  // namespace g2coh
