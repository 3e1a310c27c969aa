#include "g2coh/g2_core.hpp"

#include <algorithm>
#include <cmath>

#include "g2coh/errors.hpp"

namespace g2coh {

std::string flags_to_string(std::uint8_t flags) {
  std::string out;
  auto append = [&](G2Flag flag, const char* name) {
    if ((flags & static_cast<std::uint8_t>(flag)) == 0) return;
    if (!out.empty()) out += '|';
    out += name;
  };
  append(G2Flag::DenominatorNearZero, "DenominatorNearZero");
  append(G2Flag::NumeratorNearZero, "NumeratorNearZero");
  return out;
}

double g2_fock_pair() { return 0.5; }

double g2_from_single_J(std::complex<double> J) {
  const double m2 = std::norm(J);
  if (!std::isfinite(m2)) throw DomainError("g2_from_single_J: non-finite overlap");
  if (std::sqrt(m2) > 1.0 + 1e-9) throw DomainError("g2_from_single_J: |J| exceeds 1");
  const double a = 1.0 + m2;
  const double b = 1.0 + 3.0 * m2;
  return a * a * a / (b * b);
}

SingleOverlapMoments single_overlap_moments(std::complex<double> J) {
  const double m2 = std::norm(J);
  if (!std::isfinite(m2)) throw DomainError("single_overlap_moments: non-finite overlap");
  const double ratio = (1.0 + 3.0 * m2) / (1.0 + m2);
  return {1.0 + m2, ratio * ratio};
}

std::uint8_t near_zero_flags(double numerator, double denominator, double s1, double s2) {
  // Raw expectation values are the scaled ones times (s1 s2)^2; they are
  // compared against eps * max(|J2|^2..|J5|^2, eps_abs)^2 without forming
  // either side explicitly.
  const double reference = std::max(std::max(s1, s2), std::sqrt(kAbsoluteEpsilon));
  const double r1 = s1 / reference;
  const double r2 = s2 / reference;
  const double attenuation = (r1 * r1) * (r2 * r2);
  std::uint8_t flags = 0;
  if (!(denominator * attenuation >= kDenominatorEpsilon)) {
    flags |= static_cast<std::uint8_t>(G2Flag::DenominatorNearZero);
  }
  if (!(numerator * attenuation >= kDenominatorEpsilon)) {
    flags |= static_cast<std::uint8_t>(G2Flag::NumeratorNearZero);
  }
  return flags;
}

G2Result g2_from_overlaps(const std::array<std::complex<double>, 6>& J) {
  for (const auto& v : J) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw DomainError("g2_from_overlaps: non-finite overlap");
    }
  }
  const std::complex<double> J1 = J[0];
  // Detection 1 couples through J2, J4 and detection 2 through J3, J5. Each
  // channel is rescaled separately so that the quartic terms stay
  // representable even when the two channels differ by hundreds of decades.
  const double s1 = std::max(std::abs(J[1]), std::abs(J[3]));
  const double s2 = std::max(std::abs(J[2]), std::abs(J[4]));
  const double inv1 = s1 > 0.0 ? 1.0 / s1 : 1.0;
  const double inv2 = s2 > 0.0 ? 1.0 / s2 : 1.0;
  const std::complex<double> J2 = J[1] * inv1, J4 = J[3] * inv1;
  const std::complex<double> J3 = J[2] * inv2, J5 = J[4] * inv2;

  const double coincidence = std::norm(J2) * std::norm(J5) + std::norm(J3) * std::norm(J4) +
                             2.0 * (std::conj(J2) * J3 * J4 * std::conj(J5)).real();
  const double numerator = (1.0 + std::norm(J1)) * coincidence;
  const double single1 = std::norm(J2) + std::norm(J4) + 2.0 * (std::conj(J1) * J2 * std::conj(J4)).real();
  const double single2 = std::norm(J3) + std::norm(J5) + 2.0 * (std::conj(J1) * J3 * std::conj(J5)).real();

  G2Result r;
  r.numerator = numerator;
  r.denominator = single1 * single2;
  r.scale = std::sqrt(s1) * std::sqrt(s2);
  r.value = r.numerator / r.denominator;
  r.flags = near_zero_flags(r.numerator, r.denominator, s1, s2);
  return r;
}

G2Result g2_from_overlaps(const OverlapSet& overlaps) { return g2_from_overlaps(overlaps.values); }

G2Result evaluate_g2(const ScenarioSpec& scenario, OverlapMethod method, const QuadratureSettings& settings) {
  return g2_from_overlaps(compute_overlap_set(scenario, method, settings));
}

double assert_reduction(const ScenarioSpec& scenario, OverlapMethod method) {
  const bool matched = scenario.single_model() && scenario.delta == scenario.gamma &&
                       scenario.omegad == scenario.omega0 && scenario.tau == scenario.taup;
  if (!matched) {
    throw DomainError("assert_reduction: scenario is not matched (need delta == gamma, omegad == omega0, tau == taup)");
  }
  const OverlapSet overlaps = compute_overlap_set(scenario, method);
  const G2Result full = g2_from_overlaps(overlaps);
  return std::abs(full.value - g2_from_single_J(overlaps.J(1)));
}

}  // namespace g2coh
