#pragma once

#include <array>
#include <complex>
#include <string_view>

#include "g2coh/quadrature.hpp"
#include "g2coh/spectral_models.hpp"

namespace g2coh {

enum class OverlapMethod { ClosedForm, Quadrature };

std::string_view to_string(OverlapMethod method);
/// Accepts "closed_form"/"closed-form" and "quadrature".
OverlapMethod parse_overlap_method(std::string_view text);

/// The six commutators between photon and detection operators:
///   J1 = [A_i, A_j^+]   J2 = [A_i, D_1^+]   J3 = [A_i, D_2^+]
///   J4 = [A_j, D_1^+]   J5 = [A_j, D_2^+]   J6 = [D_1, D_2^+]
/// each equal to integral alpha_x alpha_y^* dw.
struct OverlapSet {
  std::array<std::complex<double>, 6> values{};
  OverlapMethod method = OverlapMethod::ClosedForm;
  ScenarioSpec scenario{};

  /// 1-based, matching the J1..J6 labels.
  const std::complex<double>& J(int k) const { return values.at(static_cast<std::size_t>(k - 1)); }
  std::complex<double>& J(int k) { return values.at(static_cast<std::size_t>(k - 1)); }
  std::array<double, 6> magnitudes() const;
};

/// Closed-form overlap of two Gaussian amplitudes. With S = wa^2 + wb^2 and
/// d = cb - ca:
///   sqrt(2 wa wb / S) exp[-d^2/(4S) - (ta-tb)^2 wa^2 wb^2 / S] exp[i d (ta wa^2 + tb wb^2)/S]
std::complex<double> gaussian_cross_overlap(const WavepacketSpec& a, const WavepacketSpec& b);

/// sqrt(D1 D2)/(2 pi) integral e^{-i w tau} / ((w - w1 + i D1/2)(w - w2 - i D2/2)) dw
///   = sqrt(D1 D2) / ((D1+D2)/2 + i(w1 - w2))
///     * [e^{-i w1 tau} theta(tau) e^{-D1 tau/2} + e^{-i w2 tau} theta(-tau) e^{D2 tau/2}]
/// with theta(0) = 1/2.
std::complex<double> lorentzian_cross_overlap(double omega1, double omega2, double width1,
                                              double width2, double tau);

/// Overlap of two specs of the same model by closed form.
/// Throws UnsupportedMethodError for mixed models.
std::complex<double> overlap_closed_form(const WavepacketSpec& a, const WavepacketSpec& b);

/// Photon/detector cross-overlap scale of the causal model,
/// sqrt(D G) / ((D+G)/2 + i(w0 - w0d)).
std::complex<double> lorentzian_contact_constant(const ScenarioSpec& scenario);

/// J1..J5 written out in their explicit causal forms (the general identity is
/// only used for J6). Requires both models to be LorentzianCausal.
OverlapSet lorentzian_overlap_set(const ScenarioSpec& scenario);

OverlapSet compute_overlap_set(const ScenarioSpec& scenario, OverlapMethod method,
                               const QuadratureSettings& settings = {});

/// Multiplies the amplitudes of (i, j, d1, d2) by exp(i*phase[k]); the
/// overlaps pick up exp(i(phi_x - phi_y)).
OverlapSet rephase(const OverlapSet& overlaps, const std::array<double, 4>& phases);

/// exp(-(2 pi)^2 |tau| width), the decay kernel used for the dimensionless
/// single-overlap curve (width taken as 1 there).
double legacy_fig1a_kernel(double tau, double width);

}  // namespace g2coh
