#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>

#include "g2coh/overlap_engine.hpp"
#include "g2coh/spectral_models.hpp"

namespace g2coh {

enum class G2Flag : std::uint8_t {
  DenominatorNearZero = 1u << 0,
  NumeratorNearZero = 1u << 1,
};

/// Relative threshold on the detection-probability product.
inline constexpr double kDenominatorEpsilon = 1e-20;
/// Absolute floor for the overlap scale.
inline constexpr double kAbsoluteEpsilon = 1e-300;

/// g2 together with the expectation values it came from.
///
/// numerator   = <D2^+ D1^+ D1 D2> / scale^4
/// denominator = <D1^+ D1><D2^+ D2> / scale^4
/// where scale^2 = max(|J2|,|J4|) * max(|J3|,|J5|), the product of the two
/// detection channels' overlap scales. The rescaling keeps the quotient
/// finite in the strongly mismatched regime where the raw expectation values
/// underflow.
struct G2Result {
  double value = 0.0;
  double numerator = 0.0;
  double denominator = 0.0;
  double scale = 1.0;
  std::uint8_t flags = 0;

  bool has(G2Flag flag) const { return (flags & static_cast<std::uint8_t>(flag)) != 0; }
  bool flagged() const { return flags != 0; }
};

/// Flags for scaled moments: raw value < kDenominatorEpsilon *
/// max(|J2|^2..|J5|^2, kAbsoluteEpsilon)^2, where s1 = max(|J2|,|J4|) and
/// s2 = max(|J3|,|J5|) are the channel scales used for the scaled values.
std::uint8_t near_zero_flags(double numerator, double denominator, double s1, double s2);

/// "DenominatorNearZero|NumeratorNearZero", or "" when clear.
std::string flags_to_string(std::uint8_t flags);

/// Ideal two-photon Fock state in a single mode: exactly 1/2.
double g2_fock_pair();

/// (1 + |J|^2)^3 / (1 + 3|J|^2)^2. Throws DomainError for |J| > 1 + 1e-9.
double g2_from_single_J(std::complex<double> J);

/// Photon-only moments for identical photon/detection operators:
/// numerator 1 + |J|^2, denominator (1 + 3|J|^2)^2 / (1 + |J|^2)^2.
struct SingleOverlapMoments {
  double numerator;
  double denominator;
};
SingleOverlapMoments single_overlap_moments(std::complex<double> J);

/// Full detector-mismatch formula:
///   (1+|J1|^2) (|J2|^2|J5|^2 + |J3|^2|J4|^2 + 2Re[J2^* J3 J4 J5^*])
///   / ((|J2|^2 + |J4|^2 + 2Re[J1^* J2 J4^*]) (|J3|^2 + |J5|^2 + 2Re[J1^* J3 J5^*]))
/// Near-zero denominators are flagged, not thrown: the unguarded quotient is
/// reported. Throws DomainError for non-finite overlaps.
G2Result g2_from_overlaps(const std::array<std::complex<double>, 6>& J);
G2Result g2_from_overlaps(const OverlapSet& overlaps);

/// Convenience: compute_overlap_set followed by g2_from_overlaps.
G2Result evaluate_g2(const ScenarioSpec& scenario, OverlapMethod method = OverlapMethod::ClosedForm,
                     const QuadratureSettings& settings = {});

/// For a matched scenario (delta == gamma, omegad == omega0, tau == taup and
/// a single model) returns |g2_from_overlaps - g2_from_single_J(J1)|.
/// Throws DomainError otherwise.
double assert_reduction(const ScenarioSpec& scenario, OverlapMethod method = OverlapMethod::ClosedForm);

}  // namespace g2coh
