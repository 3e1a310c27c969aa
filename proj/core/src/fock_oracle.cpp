#include "g2coh/fock_oracle.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>

#include "g2coh/errors.hpp"

namespace g2coh {
namespace {

constexpr std::size_t kPanelOrder = 16;
constexpr double kFrequencyHalfSpan = 14.0;  // in max(width)
constexpr double kTimeTail = 24.0;           // in 1/min(width)
constexpr double kMaxPhasePerPanel = 12.0;   // radians
constexpr double kAliasMargin = 9.0;         // standard deviations

std::array<WavepacketSpec, 4> operators_of(const ScenarioSpec& s) {
  return {s.photon_i(), s.photon_j(), s.detection_1(), s.detection_2()};
}

struct GaussLegendre16 {
  std::array<double, kPanelOrder> x{};
  std::array<double, kPanelOrder> w{};
};

const GaussLegendre16& gauss_legendre() {
  static const GaussLegendre16 rule = [] {
    GaussLegendre16 r;
    gsl_integration_glfixed_table* table = gsl_integration_glfixed_table_alloc(kPanelOrder);
    if (table == nullptr) throw NumericError("fock oracle: Gauss-Legendre table allocation failed");
    for (std::size_t i = 0; i < kPanelOrder; ++i) {
      gsl_integration_glfixed_point(-1.0, 1.0, i, &r.x[i], &r.w[i], table);
    }
    gsl_integration_glfixed_table_free(table);
    return r;
  }();
  return rule;
}

DiscreteModeGrid frequency_grid(const ScenarioSpec& s, std::size_t modes) {
  const auto ops = operators_of(s);
  const double wmax = std::max(s.delta, s.gamma);
  const double lo = std::min(s.omega0, s.omegad) - kFrequencyHalfSpan * wmax;
  const double hi = std::max(s.omega0, s.omegad) + kFrequencyHalfSpan * wmax;
  const double h = (hi - lo) / static_cast<double>(modes);

  // The midpoint rule aliases the pair's time-domain profile onto copies
  // shifted by 2 pi / h; require those copies to sit far in the Gaussian tail.
  for (std::size_t a = 0; a < ops.size(); ++a) {
    for (std::size_t b = a; b < ops.size(); ++b) {
      const double wa2 = ops[a].width * ops[a].width;
      const double wb2 = ops[b].width * ops[b].width;
      const double sigma = std::sqrt(2.0 * wa2 * wb2 / (wa2 + wb2));
      const double gap = 2.0 * std::numbers::pi / h - std::abs(ops[a].time - ops[b].time);
      if (gap * sigma < kAliasMargin) {
        std::ostringstream msg;
        msg << "fock oracle: " << modes << " frequency modes cannot resolve a time offset of "
            << std::abs(ops[a].time - ops[b].time) << " s; increase the mode count";
        throw NumericError(msg.str());
      }
    }
  }

  DiscreteModeGrid grid;
  grid.basis = ModeBasis::FrequencyBins;
  grid.nodes.resize(modes);
  grid.weights.assign(modes, h);
  for (std::size_t k = 0; k < modes; ++k) grid.nodes[k] = lo + h * (static_cast<double>(k) + 0.5);
  return grid;
}

DiscreteModeGrid time_grid(const ScenarioSpec& s, std::size_t modes) {
  const auto ops = operators_of(s);
  std::vector<double> breaks;
  for (const auto& op : ops) breaks.push_back(-op.time);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  breaks.push_back(breaks.back() + kTimeTail / std::min(s.delta, s.gamma));

  const std::size_t segments = breaks.size() - 1;
  const std::size_t panels = modes / kPanelOrder;
  const double total = breaks.back() - breaks.front();

  // Panels proportional to segment length, at least one each, remainder to
  // the largest fractional parts.
  std::vector<std::size_t> count(segments);
  std::vector<std::pair<double, std::size_t>> remainder;
  std::size_t used = 0;
  for (std::size_t i = 0; i < segments; ++i) {
    const double share = static_cast<double>(panels) * (breaks[i + 1] - breaks[i]) / total;
    count[i] = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(share)));
    remainder.emplace_back(share - std::floor(share), i);
    used += count[i];
  }
  std::sort(remainder.begin(), remainder.end(), std::greater<>());
  for (std::size_t r = 0; used < panels; r = (r + 1) % segments, ++used) ++count[remainder[r].second];
  while (used > panels) {
    auto largest = std::max_element(count.begin(), count.end());
    --*largest;
    --used;
  }

  const double rate = std::abs(s.omega0 - s.omegad) + std::max(s.delta, s.gamma);
  const auto& rule = gauss_legendre();
  DiscreteModeGrid grid;
  grid.basis = ModeBasis::TimeBins;
  grid.nodes.reserve(panels * kPanelOrder);
  grid.weights.reserve(panels * kPanelOrder);
  for (std::size_t i = 0; i < segments; ++i) {
    const double width = (breaks[i + 1] - breaks[i]) / static_cast<double>(count[i]);
    if (width * rate > kMaxPhasePerPanel) {
      std::ostringstream msg;
      msg << "fock oracle: " << modes << " time modes give panels of " << width * rate
          << " rad; increase the mode count";
      throw NumericError(msg.str());
    }
    for (std::size_t p = 0; p < count[i]; ++p) {
      const double mid = breaks[i] + width * (static_cast<double>(p) + 0.5);
      for (std::size_t q = 0; q < kPanelOrder; ++q) {
        grid.nodes.push_back(mid + 0.5 * width * rule.x[q]);
        grid.weights.push_back(0.5 * width * rule.w[q]);
      }
    }
  }
  return grid;
}

long double discrete_norm(std::span<const oracle_complex> x) {
  long double sum = 0.0L;
  for (const auto& v : x) sum += std::norm(v);
  return sum;
}

oracle_complex discrete_overlap(std::span<const oracle_complex> a, std::span<const oracle_complex> b) {
  oracle_complex sum{0.0L, 0.0L};
  for (std::size_t k = 0; k < a.size(); ++k) sum += a[k] * std::conj(b[k]);
  return sum;
}

void check_grid_norms(const DiscreteModeGrid& grid, const ScenarioSpec& s) {
  for (const auto& op : operators_of(s)) {
    const long double norm = discrete_norm(mode_coefficients(grid, op));
    if (std::abs(static_cast<double>(norm) - 1.0) > kGridNormTolerance) {
      std::ostringstream msg;
      msg.precision(12);
      msg << "fock oracle: discrete norm " << static_cast<double>(norm) << " for a wavepacket at "
          << op.center_frequency << " s^-1; increase the mode count";
      throw NumericError(msg.str());
    }
  }
}

G2Result finish(long double numerator, long double denominator, long double s1, long double s2) {
  const long double c1 = s1 > 0.0L ? s1 * s1 : 1.0L;
  const long double c2 = s2 > 0.0L ? s2 * s2 : 1.0L;
  G2Result r;
  r.value = static_cast<double>(numerator / denominator);
  r.numerator = static_cast<double>(numerator / (c1 * c2));
  r.denominator = static_cast<double>(denominator / (c1 * c2));
  r.scale = static_cast<double>(std::sqrt(s1 * s2));
  r.flags = near_zero_flags(r.numerator, r.denominator, static_cast<double>(s1), static_cast<double>(s2));
  return r;
}

}  // namespace

DiscreteModeGrid discretize(const ScenarioSpec& scenario, std::size_t modes) {
  validate(scenario);
  if (modes < kMinimumModes) {
    throw DomainError("fock oracle: at least " + std::to_string(kMinimumModes) + " modes are required");
  }
  if (!scenario.single_model()) {
    throw UnsupportedMethodError("fock oracle: mixed Gaussian/Lorentzian scenarios are not supported");
  }
  DiscreteModeGrid grid = scenario.photon_model == SpectralModel::Gaussian ? frequency_grid(scenario, modes)
                                                                           : time_grid(scenario, modes);
  check_grid_norms(grid, scenario);
  return grid;
}

std::vector<oracle_complex> mode_coefficients(const DiscreteModeGrid& grid, const WavepacketSpec& spec) {
  std::vector<oracle_complex> x(grid.size());
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const long double node = grid.nodes[k];
    const long double weight = grid.weights[k];
    if (grid.basis == ModeBasis::FrequencyBins) {
      x[k] = amplitude<long double>(spec, node) * std::sqrt(weight);
    } else {
      x[k] = causal_time_profile<long double>(spec, node) * std::sqrt(two_pi * weight);
    }
  }
  return x;
}

std::size_t TwoPhotonState::index(std::size_t k, std::size_t l) const {
  if (k > l) std::swap(k, l);
  // Row-major upper triangle including the diagonal.
  return k * modes_ - k * (k - 1) / 2 + (l - k);
}

TwoPhotonState TwoPhotonState::from_photon_pair(std::span<const oracle_complex> u,
                                                std::span<const oracle_complex> v) {
  if (u.size() != v.size() || u.empty()) throw DomainError("TwoPhotonState: mode vectors must match");
  TwoPhotonState state;
  const std::size_t n = u.size();
  state.modes_ = n;
  state.coefficients_.resize(n * (n + 1) / 2);
  const long double root2 = std::sqrt(2.0L);
  long double norm = 0.0L;
  std::size_t at = 0;
  for (std::size_t k = 0; k < n; ++k) {
    state.coefficients_[at] = root2 * u[k] * v[k];
    norm += std::norm(state.coefficients_[at]);
    ++at;
    for (std::size_t l = k + 1; l < n; ++l, ++at) {
      state.coefficients_[at] = u[k] * v[l] + u[l] * v[k];
      norm += std::norm(state.coefficients_[at]);
    }
  }
  if (!(norm > 0.0L)) throw NumericError("TwoPhotonState: the two-photon state vanishes");
  state.norm_ = norm;
  const long double inv = 1.0L / std::sqrt(norm);
  for (auto& c : state.coefficients_) c *= inv;
  return state;
}

oracle_complex TwoPhotonState::coefficient(std::size_t k, std::size_t l) const {
  if (k >= modes_ || l >= modes_) throw DomainError("TwoPhotonState: mode index out of range");
  return coefficients_[index(k, l)];
}

long double TwoPhotonState::total_probability() const {
  long double sum = 0.0L;
  for (const auto& c : coefficients_) sum += std::norm(c);
  return sum;
}

oracle_complex TwoPhotonState::two_photon_amplitude(std::span<const oracle_complex> d1,
                                                    std::span<const oracle_complex> d2) const {
  if (d1.size() != modes_ || d2.size() != modes_) throw DomainError("TwoPhotonState: detector size mismatch");
  const long double root2 = std::sqrt(2.0L);
  oracle_complex sum{0.0L, 0.0L};
  std::size_t at = 0;
  for (std::size_t k = 0; k < modes_; ++k) {
    sum += coefficients_[at++] * root2 * d1[k] * d2[k];
    for (std::size_t l = k + 1; l < modes_; ++l, ++at) {
      sum += coefficients_[at] * (d1[k] * d2[l] + d1[l] * d2[k]);
    }
  }
  return sum;
}

long double TwoPhotonState::one_photon_norm(std::span<const oracle_complex> d) const {
  if (d.size() != modes_) throw DomainError("TwoPhotonState: detector size mismatch");
  const long double root2 = std::sqrt(2.0L);
  std::vector<oracle_complex> e(modes_);
  std::size_t at = 0;
  for (std::size_t k = 0; k < modes_; ++k) {
    e[k] += root2 * coefficients_[at++] * d[k];
    for (std::size_t l = k + 1; l < modes_; ++l, ++at) {
      e[l] += coefficients_[at] * d[k];
      e[k] += coefficients_[at] * d[l];
    }
  }
  return discrete_norm(e);
}

G2Result oracle_g2(const ScenarioSpec& scenario, std::size_t modes) {
  return oracle_g2(discretize(scenario, modes), scenario);
}

G2Result oracle_g2(const DiscreteModeGrid& grid, const ScenarioSpec& scenario) {
  const auto xi = mode_coefficients(grid, scenario.photon_i());
  const auto xj = mode_coefficients(grid, scenario.photon_j());
  const auto d1 = mode_coefficients(grid, scenario.detection_1());
  const auto d2 = mode_coefficients(grid, scenario.detection_2());

  std::vector<oracle_complex> u(xi.size()), v(xj.size());
  std::transform(xi.begin(), xi.end(), u.begin(), [](const oracle_complex& c) { return std::conj(c); });
  std::transform(xj.begin(), xj.end(), v.begin(), [](const oracle_complex& c) { return std::conj(c); });
  const TwoPhotonState psi = TwoPhotonState::from_photon_pair(u, v);

  const long double numerator = std::norm(psi.two_photon_amplitude(d1, d2));
  const long double denominator = psi.one_photon_norm(d1) * psi.one_photon_norm(d2);

  const long double s1 = std::max(std::abs(discrete_overlap(xi, d1)), std::abs(discrete_overlap(xj, d1)));
  const long double s2 = std::max(std::abs(discrete_overlap(xi, d2)), std::abs(discrete_overlap(xj, d2)));
  return finish(numerator, denominator, s1, s2);
}

OracleMoments oracle_moments(const ScenarioSpec& scenario, std::size_t modes) {
  const DiscreteModeGrid grid = discretize(scenario, modes);
  const auto xi = mode_coefficients(grid, scenario.photon_i());
  const auto xj = mode_coefficients(grid, scenario.photon_j());
  std::vector<oracle_complex> u(xi.size()), v(xj.size());
  std::transform(xi.begin(), xi.end(), u.begin(), [](const oracle_complex& c) { return std::conj(c); });
  std::transform(xj.begin(), xj.end(), v.begin(), [](const oracle_complex& c) { return std::conj(c); });
  const TwoPhotonState psi = TwoPhotonState::from_photon_pair(u, v);
  const long double numerator = std::norm(psi.two_photon_amplitude(xi, xj));
  const long double denominator = psi.one_photon_norm(xi) * psi.one_photon_norm(xj);
  return {static_cast<double>(numerator), static_cast<double>(denominator)};
}

}  // namespace g2coh
