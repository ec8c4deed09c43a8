#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "thermopurity/errors.hpp"

namespace thermopurity {

/// Raw physical inputs of the two coupled oscillators:
/// H = p1^2/2m1 + p2^2/2m2 + (C1 x1^2 + C2 x2^2 + C3 x1 x2)/2.
struct OscillatorParams {
  double m1;
  double m2;
  double c1;
  double c2;
  double c3;
  double hbar = 1.0;
};

/// Parameters of the decoupled picture: two independent modes with
/// frequencies omega * exp(+-eta), mixed by the angle theta.
struct DecoupledParams {
  double mu;     // (m1/m2)^{1/4}
  double theta;  // mixing angle, [0, 2*pi)
  double eta;    // half log-ratio of the normal-mode frequencies
  double k;      // sqrt(C1*C2 - C3^2/4)
  double m;      // sqrt(m1*m2)
  double omega;  // sqrt(k/m)
  double e0;     // hbar*omega*cosh(eta)
  double hbar = 1.0;
};

inline void validate(const OscillatorParams& p) {
  if (p.m1 <= 0 || p.m2 <= 0) throw NonPositiveParameter("mass must be positive");
  if (p.c1 <= 0 || p.c2 <= 0) throw NonPositiveParameter("spring constant must be positive");
  if (p.hbar <= 0) throw NonPositiveParameter("hbar must be positive");
  if (p.c1 * p.c2 - p.c3 * p.c3 / 4.0 <= 0)
    throw UnstablePotential("C1*C2 - C3^2/4 must be positive (bound potential)");
}

/// Decouples the two oscillators. The positive square-root branch is used for
/// exp(2*eta), so eta >= 0; theta is resolved by atan2(C3, mu^2 C2 - C1/mu^2)
/// with theta = 0 in the uncoupled case C3 = 0.
inline DecoupledParams derive_decoupled(const OscillatorParams& p) {
  validate(p);
  const double mu = std::pow(p.m1 / p.m2, 0.25);
  const double mu2 = mu * mu;
  const double k = std::sqrt(p.c1 * p.c2 - p.c3 * p.c3 / 4.0);
  const double m = std::sqrt(p.m1 * p.m2);
  const double omega = std::sqrt(k / m);

  const double sum = p.c1 / mu2 + mu2 * p.c2;
  const double disc = std::sqrt((p.c1 / mu2 - mu2 * p.c2) * (p.c1 / mu2 - mu2 * p.c2) +
                                p.c3 * p.c3);
  const double exp2eta = (sum + disc) / (2.0 * k);
  // Negative branch, written without the cancellation-prone sum - disc.
  const double exp2eta_neg = 2.0 * k / (sum + disc);
  if (std::abs(exp2eta * exp2eta_neg - 1.0) > 1e-14)
    throw std::logic_error("exp(2 eta) branches do not multiply to 1");
  const double eta = 0.5 * std::log(exp2eta);

  double theta = 0.0;
  if (p.c3 != 0.0) {
    theta = std::atan2(p.c3, mu2 * p.c2 - p.c1 / mu2);
    if (theta < 0) theta += 2.0 * std::numbers::pi;
  }

  return DecoupledParams{mu, theta, eta, k, m, omega,
                         p.hbar * omega * std::cosh(eta), p.hbar};
}

/// Dimensionless constructor for (eta, theta, beta) sweeps: hbar = m = omega = 1.
/// beta_omega is the sweep's inverse temperature; it is not part of the state
/// and is accepted only so sweep call sites read uniformly.
inline DecoupledParams from_decoupled(double eta, double theta, double beta_omega = 0.0) {
  (void)beta_omega;
  return DecoupledParams{1.0, theta, eta, 1.0, 1.0, 1.0, std::cosh(eta), 1.0};
}

/// Maps decoupled parameters back to a coupled-oscillator system, pairing the
/// first normal mode with exp(+eta) as in the propagator kernels. Note this is
/// a reflection (x2 -> -x2, i.e. C3 -> -C3) of the system derive_decoupled
/// started from whenever C3 != 0: the eta >= 0 branch together with
/// theta in (0, pi) lands on the mirrored member of the pair. All scalar
/// observables coincide on both.
inline OscillatorParams to_oscillator(const DecoupledParams& dp) {
  const double c = std::cos(dp.theta / 2.0);
  const double s = std::sin(dp.theta / 2.0);
  Eigen::Matrix2d uinv;
  uinv << dp.mu * c, -s / dp.mu, dp.mu * s, c / dp.mu;
  Eigen::Matrix2d d = Eigen::Vector2d(dp.k * std::exp(2.0 * dp.eta),
                                      dp.k * std::exp(-2.0 * dp.eta))
                          .asDiagonal();
  const Eigen::Matrix2d kmat = uinv.transpose() * d * uinv;
  return OscillatorParams{dp.m * dp.mu * dp.mu, dp.m / (dp.mu * dp.mu),
                          kmat(0, 0), kmat(1, 1), 2.0 * kmat(0, 1), dp.hbar};
}

}  // namespace thermopurity
