#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "g2coh/g2_core.hpp"
#include "g2coh/spectral_models.hpp"

// Brute-force check of the commutator algebra: the continuum of modes is
// replaced by N discrete bosonic modes, the two-photon state is built as an
// explicit coefficient table and every expectation value is obtained by
// applying annihilation operators to it. Nothing here uses the J-algebra.

namespace g2coh {

using oracle_complex = std::complex<long double>;

/// Frequency bins sample alpha(w) directly. Time bins sample the causal
/// time profile; they are used when every wavepacket is causal-Lorentzian,
/// whose 1/w spectral tails cannot be represented on a finite frequency grid.
enum class ModeBasis { FrequencyBins, TimeBins };

struct DiscreteModeGrid {
  ModeBasis basis = ModeBasis::FrequencyBins;
  std::vector<double> nodes;    // s^-1 or s
  std::vector<double> weights;  // same unit as nodes, all > 0

  std::size_t size() const { return nodes.size(); }
};

/// Tolerance on the discrete norm of every wavepacket of the scenario.
inline constexpr double kGridNormTolerance = 1e-6;
inline constexpr std::size_t kMinimumModes = 64;

/// Frequency grid: uniform midpoint bins spanning every center +- 14 widths.
/// Time grid: composite Gauss-Legendre panels with breakpoints at every
/// wavepacket onset, extended 24 / min(width) past the last one.
/// Throws DomainError for modes < 64 and NumericError when some wavepacket's
/// discrete norm misses 1 by more than 1e-6.
DiscreteModeGrid discretize(const ScenarioSpec& scenario, std::size_t modes);

/// Coefficients x_k such that the wavepacket annihilation operator is
/// sum_k x_k b_k.
std::vector<oracle_complex> mode_coefficients(const DiscreteModeGrid& grid, const WavepacketSpec& spec);

/// Normalized state proportional to A_u^+ A_v^+ |0>, stored as a dense packed
/// table over the occupation basis {|1_k 1_l>, k < l} U {|2_k>}.
class TwoPhotonState {
 public:
  /// u and v are the annihilation coefficients of the two photons.
  static TwoPhotonState from_photon_pair(std::span<const oracle_complex> u,
                                         std::span<const oracle_complex> v);

  std::size_t modes() const { return modes_; }
  /// Coefficient of |1_k 1_l> (k != l) or |2_k> (k == l).
  oracle_complex coefficient(std::size_t k, std::size_t l) const;
  /// Squared norm of A_u^+ A_v^+ |0> before normalization.
  long double unnormalized_norm() const { return norm_; }
  /// sum |c|^2 over the occupation basis (1 after normalization).
  long double total_probability() const;

  /// <0| D1 D2 |psi> for detection operators D = sum_k d_k b_k.
  oracle_complex two_photon_amplitude(std::span<const oracle_complex> d1,
                                      std::span<const oracle_complex> d2) const;
  /// || D |psi> ||^2.
  long double one_photon_norm(std::span<const oracle_complex> d) const;

 private:
  std::size_t index(std::size_t k, std::size_t l) const;

  std::size_t modes_ = 0;
  long double norm_ = 0.0L;
  std::vector<oracle_complex> coefficients_;
};

/// <D2^+ D1^+ D1 D2> / (<D1^+ D1><D2^+ D2>) on an explicit two-photon state.
/// Scaling and flags mirror g2_from_overlaps.
G2Result oracle_g2(const ScenarioSpec& scenario, std::size_t modes);
G2Result oracle_g2(const DiscreteModeGrid& grid, const ScenarioSpec& scenario);

/// Photon-only moments <A_j^+ A_i^+ A_i A_j> and <A_i^+ A_i><A_j^+ A_j>.
struct OracleMoments {
  double numerator;
  double denominator;
};
OracleMoments oracle_moments(const ScenarioSpec& scenario, std::size_t modes);

}  // namespace g2coh
