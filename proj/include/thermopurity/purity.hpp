#pragma once

#include <algorithm>
#include <cmath>

#include "thermopurity/errors.hpp"
#include "thermopurity/thermal.hpp"

namespace thermopurity {

/// One evaluated purity sample in the dimensionless (eta, theta, beta) space.
struct PurityPoint {
  double eta;
  double theta;
  double beta;  // hbar*omega*beta
  double value;
};

namespace detail {

// tanh saturates at 50 to machine precision; clamping keeps e^eta * beta
// products finite.
inline double tanh_clamped(double x) { return std::tanh(std::min(x, 50.0)); }

}  // namespace detail

/// Closed-form purity P(eta, theta, beta) with beta dimensionless (hbar*omega*beta).
inline double purity_closed(double eta, double theta, double beta) {
  detail::require_positive_beta(beta);
  const double ep = std::exp(eta), em = std::exp(-eta);
  const double tp = detail::tanh_clamped(beta * ep);
  const double tm = detail::tanh_clamped(beta * em);
  const double s2 = std::sin(theta / 2) * std::sin(theta / 2);
  const double c2 = std::cos(theta / 2) * std::cos(theta / 2);
  return std::sqrt(tp * tm / ((ep * tp * s2 + em * tm * c2) *
                              (ep * tp * c2 + em * tm * s2)));
}

/// Purity from the wavefunction exponent coefficients:
/// sqrt((alpha*beta - gamma^2) / (alpha*beta)).
inline double purity_from_coeffs(const WavefunctionCoeffs& w) {
  const double ab = w.alpha_tilde * w.beta_tilde;
  if (!(w.alpha_tilde > 0) || !(w.beta_tilde > 0) ||
      !(ab - w.gamma_tilde * w.gamma_tilde > 0))
    throw DegenerateKernel("wavefunction coefficients are not a valid Gaussian state");
  return std::sqrt((ab - w.gamma_tilde * w.gamma_tilde) / ab);
}

/// Ground-state (beta -> infinity) purity. At the degenerate angles
/// theta in {0, pi, 2pi} the tan/cot form is singular but its algebraic
/// limit is 1, which is returned instead of raising.
inline double purity_low_t(double eta, double theta) {
  const double cs = std::abs(std::sin(theta / 2) * std::cos(theta / 2));
  if (cs < 1e-12) return 1.0;
  const double t = std::tan(theta / 2);
  return 1.0 / (cs * std::sqrt(2.0 * std::cosh(2.0 * eta) + t * t + 1.0 / (t * t)));
}

/// High-temperature (beta -> epsilon/2) purity. Satisfies
/// purity_high_t(eta, theta) == purity_low_t(2*eta, theta).
inline double purity_high_t(double eta, double theta) {
  const double e2p = std::exp(2.0 * eta), e2m = std::exp(-2.0 * eta);
  const double s2 = std::sin(theta / 2) * std::sin(theta / 2);
  const double c2 = std::cos(theta / 2) * std::cos(theta / 2);
  return 1.0 / std::sqrt((e2p * s2 + e2m * c2) * (e2p * c2 + e2m * s2));
}

/// Identical-particle purity (m1 = m2, C1 = C2): the explicit tanh formula
/// with mode frequencies sqrt((C1 +- C3/2) / m1).
inline double purity_identical(double c1, double c3, double m1, double hbar,
                               double beta) {
  if (!(c1 > 0) || !(m1 > 0) || !(hbar > 0))
    throw NonPositiveParameter("c1, m1, hbar must be positive");
  detail::require_positive_beta(beta);
  if (std::abs(c3) >= 2.0 * c1)
    throw UnstablePotential("|C3| must be below 2*C1 for identical particles");
  const double wp = std::sqrt((c1 + c3 / 2.0) / m1);
  const double wm = std::sqrt((c1 - c3 / 2.0) / m1);
  const double tp = detail::tanh_clamped(hbar * wp * beta);
  const double tm = detail::tanh_clamped(hbar * wm * beta);
  const double r4 = std::pow((c1 + c3 / 2.0) / (c1 - c3 / 2.0), 0.25);
  return 2.0 * std::sqrt(tp * tm) / (r4 * tp + tm / r4);
}

/// Linear entropy S = d/(d-1) * (1 - P) for a d-dimensional subsystem.
inline double linear_entropy(double purity, int d) {
  if (d < 2) throw OutOfRange("dimension must be at least 2");
  if (purity < 1.0 / d || purity > 1.0)
    throw OutOfRange("purity must lie in [1/d, 1]");
  return double(d) / (d - 1) * (1.0 - purity);
}

}  // namespace thermopurity
