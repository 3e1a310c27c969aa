#pragma once

#include <complex>

#include "g2coh/spectral_models.hpp"

namespace g2coh {

/// Controls the reference quadrature used as the universal overlap oracle.
struct QuadratureSettings {
  double relative_tolerance = 1e-10;
  /// Half-width of the core interval beyond the amplitude centers, in units
  /// of max(width_a, width_b).
  double initial_half_width_multiplier = 40.0;
  /// Doublings of the core interval allowed for integrands with at least one
  /// Gaussian factor.
  int max_domain_doublings = 12;

  friend bool operator==(const QuadratureSettings&, const QuadratureSettings&) = default;
};

void validate(const QuadratureSettings& settings);

/// integral alpha_a(w) alpha_b(w)^* dw over the whole real line.
///
/// The core interval is integrated with adaptive Gauss-Kronrod. When a
/// Gaussian factor is present the domain is doubled until the appended shell
/// contributes less than the relative tolerance. For two Lorentzian factors
/// the 1/w^2 tails are integrated exactly to infinity (semi-infinite map when
/// non-oscillatory, Fourier-integral extrapolation otherwise), because
/// truncation converges only like 1/L.
///
/// Throws NumericError with the last two estimates when the tolerance cannot
/// be met.
std::complex<double> overlap_quadrature(const WavepacketSpec& a, const WavepacketSpec& b,
                                        const QuadratureSettings& settings = {});

}  // namespace g2coh
