#include "g2coh/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>

#include "g2coh/errors.hpp"

namespace g2coh {
namespace {

using cdouble = std::complex<double>;

constexpr std::size_t kSubintervalLimit = 2000;
constexpr std::size_t kQawoLevels = 50;
// Scale floor below which cancellation cannot be resolved in double.
constexpr double kRoundoffFloor = 1e-15;

void silence_gsl_handler() {
  static std::once_flag once;
  std::call_once(once, [] { gsl_set_error_handler_off(); });
}

struct WorkspaceDeleter {
  void operator()(gsl_integration_workspace* w) const { gsl_integration_workspace_free(w); }
};
using Workspace = std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter>;

struct QawoDeleter {
  void operator()(gsl_integration_qawo_table* t) const { gsl_integration_qawo_table_free(t); }
};
using QawoTable = std::unique_ptr<gsl_integration_qawo_table, QawoDeleter>;

Workspace make_workspace() {
  Workspace w(gsl_integration_workspace_alloc(kSubintervalLimit));
  if (!w) throw NumericError("quadrature: workspace allocation failed");
  return w;
}

template <class F>
double trampoline(double x, void* params) {
  return (*static_cast<F*>(params))(x);
}

template <class F>
gsl_function as_gsl(F& f) {
  return gsl_function{&trampoline<F>, &f};
}

struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

void check_status(int status, const Estimate& e, double target, const char* what) {
  if (status == GSL_SUCCESS) return;
  // Roundoff detection near the double-precision floor still returns a usable
  // value when the reported error is within reach of the target.
  if ((status == GSL_EROUND || status == GSL_ESING) && e.error <= 100.0 * target) return;
  std::ostringstream msg;
  msg.precision(17);
  msg << "quadrature: " << what << " failed (" << gsl_strerror(status) << "), estimate " << e.value
      << " +- " << e.error << ", target " << target;
  throw NumericError(msg.str());
}

template <class F>
Estimate qag(F f, double a, double b, double epsabs, double epsrel) {
  auto ws = make_workspace();
  gsl_function g = as_gsl(f);
  Estimate e;
  const int status = gsl_integration_qag(&g, a, b, epsabs, epsrel, kSubintervalLimit, GSL_INTEG_GAUSS61,
                                         ws.get(), &e.value, &e.error);
  check_status(status, e, std::max(epsabs, epsrel * std::abs(e.value)), "qag");
  return e;
}

template <class F>
Estimate qagiu(F f, double a, double epsabs, double epsrel) {
  auto ws = make_workspace();
  gsl_function g = as_gsl(f);
  Estimate e;
  const int status = gsl_integration_qagiu(&g, a, epsabs, epsrel, kSubintervalLimit, ws.get(), &e.value, &e.error);
  check_status(status, e, std::max(epsabs, epsrel * std::abs(e.value)), "qagiu");
  return e;
}

template <class F>
Estimate qawf(F f, double a, double omega, gsl_integration_qawo_enum weight, double epsabs) {
  auto ws = make_workspace();
  auto cycles = make_workspace();
  QawoTable table(gsl_integration_qawo_table_alloc(omega, 1.0, weight, kQawoLevels));
  if (!table) throw NumericError("quadrature: qawo table allocation failed");
  gsl_function g = as_gsl(f);
  Estimate e;
  const int status = gsl_integration_qawf(&g, a, epsabs, kSubintervalLimit, ws.get(), cycles.get(), table.get(),
                                          &e.value, &e.error);
  check_status(status, e, epsabs, "qawf");
  return e;
}

/// integral over [a, b] of a complex function, absolute target per component.
template <class F>
cdouble integrate_complex(const F& f, double a, double b, double epsabs, double epsrel) {
  const Estimate re = qag([&](double x) { return f(x).real(); }, a, b, epsabs, epsrel);
  const Estimate im = qag([&](double x) { return f(x).imag(); }, a, b, epsabs, epsrel);
  return {re.value, im.value};
}

/// integral_{from}^{inf} envelope(x) exp(i kappa x) dx for an envelope
/// decaying like 1/x^2.
template <class F>
cdouble fourier_tail(const F& envelope, double kappa, double from, double epsabs, double epsrel) {
  auto re = [&](double x) { return envelope(x).real(); };
  auto im = [&](double x) { return envelope(x).imag(); };
  if (kappa == 0.0) {
    return {qagiu(re, from, epsabs, epsrel).value, qagiu(im, from, epsabs, epsrel).value};
  }
  const double omega = std::abs(kappa);
  const double sign = kappa > 0.0 ? 1.0 : -1.0;
  const double part = 0.5 * epsabs;
  const double re_cos = qawf(re, from, omega, GSL_INTEG_COSINE, part).value;
  const double im_cos = qawf(im, from, omega, GSL_INTEG_COSINE, part).value;
  const double re_sin = qawf(re, from, omega, GSL_INTEG_SINE, part).value;
  const double im_sin = qawf(im, from, omega, GSL_INTEG_SINE, part).value;
  // (Er + i Ei)(cos + i sign sin)
  return {re_cos - sign * im_sin, im_cos + sign * re_sin};
}

}  // namespace

void validate(const QuadratureSettings& settings) {
  if (!(settings.relative_tolerance > 0.0) || !std::isfinite(settings.relative_tolerance)) {
    throw DomainError("quadrature: relative_tolerance must be > 0");
  }
  if (!(settings.initial_half_width_multiplier >= 1.0) || !std::isfinite(settings.initial_half_width_multiplier)) {
    throw DomainError("quadrature: initial_half_width_multiplier must be >= 1");
  }
  if (settings.max_domain_doublings < 1) throw DomainError("quadrature: max_domain_doublings must be >= 1");
}

cdouble overlap_quadrature(const WavepacketSpec& a, const WavepacketSpec& b, const QuadratureSettings& settings) {
  silence_gsl_handler();
  validate(a);
  validate(b);
  validate(settings);

  // Work in x = (w - center) / scale; the carrier exp(i k w) splits into a
  // constant phase and exp(i kappa x).
  const double center = 0.5 * (a.center_frequency + b.center_frequency);
  const double scale = std::max(a.width, b.width);
  const double k = phase_slope(a) - phase_slope(b);
  const double constant_phase = phase_offset(a) - phase_offset(b) + k * center;
  const double kappa = k * scale;
  const double tol = settings.relative_tolerance;

  auto envelope = [&](double x) {
    const double w = center + scale * x;
    return spectral_envelope(a, w) * std::conj(spectral_envelope(b, w));
  };
  auto integrand = [&](double x) { return envelope(x) * std::polar(1.0, kappa * x); };

  const double half =
      std::abs(a.center_frequency - b.center_frequency) / (2.0 * scale) + settings.initial_half_width_multiplier;

  // Magnitude scale of the integrand, used to set absolute targets.
  const double magnitude = qag([&](double x) { return std::abs(envelope(x)); }, -half, half, 0.0, 1e-6).value;
  if (magnitude == 0.0 || !std::isfinite(magnitude)) {
    if (magnitude == 0.0) return {0.0, 0.0};
    throw NumericError("quadrature: non-finite integrand magnitude");
  }

  cdouble core = integrate_complex(integrand, -half, half, 1e-2 * tol * magnitude, tol);
  if (std::abs(core) < 1e-2 * magnitude) {
    // Oscillation cancels most of the mass: tighten the absolute target.
    const double target = std::max(0.25 * tol * std::abs(core), kRoundoffFloor * magnitude);
    core = integrate_complex(integrand, -half, half, target, tol);
  }
  const double tail_target = std::max(0.25 * tol * std::abs(core), kRoundoffFloor * magnitude);

  cdouble total = core;
  const bool heavy_tails =
      a.model == SpectralModel::LorentzianCausal && b.model == SpectralModel::LorentzianCausal;
  if (heavy_tails) {
    auto mirrored = [&](double y) { return envelope(-y); };
    total += fourier_tail(envelope, kappa, half, tail_target, tol);
    total += fourier_tail(mirrored, -kappa, half, tail_target, tol);
  } else {
    double inner = half;
    bool converged = false;
    cdouble previous = total;
    for (int d = 0; d < settings.max_domain_doublings; ++d) {
      const double outer = 2.0 * inner;
      const cdouble shell = integrate_complex(integrand, inner, outer, tail_target, tol) +
                            integrate_complex(integrand, -outer, -inner, tail_target, tol);
      previous = total;
      total += shell;
      if (std::abs(shell) <= tol * std::abs(total)) {
        converged = true;
        break;
      }
      inner = outer;
    }
    if (!converged) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "quadrature: no convergence after " << settings.max_domain_doublings
          << " domain doublings; last estimates " << previous << " and " << total;
      throw NumericError(msg.str());
    }
  }
  return scale * std::polar(1.0, constant_phase) * total;
}

}  // namespace g2coh
