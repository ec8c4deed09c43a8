#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "thermopurity/errors.hpp"
#include "thermopurity/model.hpp"
#include "thermopurity/quadform.hpp"

namespace thermopurity {

/// Exponent coefficients of the full two-point density matrix
/// rho(x1b,x2b,x1a,x2a;beta).
struct PropagatorCoeffs {
  double a, b, c, d, f, g;
};

/// Exponent coefficients of the diagonal probability density P_beta(x1,x2),
/// with the log of its prefactor (including exp(+beta*E0)).
struct DiagonalCoeffs {
  double a_tilde, b_tilde, c_tilde;
  double log_norm;
};

/// Exponent coefficients of the beta-dependent wavefunction psi(x1,x2;beta),
/// with the log of its prefactor (including exp(+beta*hbar*omega*cosh(eta))).
struct WavefunctionCoeffs {
  double alpha_tilde, beta_tilde, gamma_tilde;
  double log_norm;
};

namespace detail {

inline void require_positive_beta(double beta) {
  if (!(beta > 0)) throw NonPositiveBeta("beta must be positive");
}

// Hyperbolics safe for arguments up to ~1e3 (sweeps reach hbar*omega*beta*e^eta ~ 500).
inline double coth(double x) { return 1.0 / std::tanh(x); }

inline double csch(double x) {
  if (x > 30.0) return 2.0 * std::exp(-x);
  return 1.0 / std::sinh(x);
}

inline double log_sinh(double x) {
  if (x > 30.0) return x - std::numbers::ln2;
  return std::log(std::sinh(x));
}

inline double log_cosh(double x) {
  if (x > 30.0) return x - std::numbers::ln2;
  return std::log(std::cosh(x));
}

}  // namespace detail

inline PropagatorCoeffs propagator_coeffs(const DecoupledParams& dp, double beta) {
  detail::require_positive_beta(beta);
  const double ep = std::exp(dp.eta), em = std::exp(-dp.eta);
  const double u = dp.hbar * dp.omega * beta * ep;
  const double v = dp.hbar * dp.omega * beta * em;
  const double s0 = dp.m * dp.omega / (2.0 * dp.hbar);
  const double mu2 = dp.mu * dp.mu;
  const double c2 = std::cos(dp.theta / 2) * std::cos(dp.theta / 2);
  const double s2 = std::sin(dp.theta / 2) * std::sin(dp.theta / 2);
  const double cs = std::cos(dp.theta / 2) * std::sin(dp.theta / 2);
  const double cu = detail::coth(u), cv = detail::coth(v);
  const double su = detail::csch(u), sv = detail::csch(v);
  return PropagatorCoeffs{
      mu2 * s0 * (ep * cu * c2 + em * cv * s2),
      s0 / mu2 * (ep * cu * s2 + em * cv * c2),
      s0 * (ep * cu - em * cv) * cs,
      mu2 * s0 * (ep * su * c2 + em * sv * s2),
      s0 / mu2 * (ep * su * s2 + em * sv * c2),
      s0 * (ep * su - em * sv) * cs};
}

namespace detail {

// Log prefactor shared by the density matrix and its diagonal:
// (m*omega / 2*pi*hbar) * e^{+beta E0} / sqrt(sinh(u) sinh(v)).
inline double density_log_prefactor(const DecoupledParams& dp, double beta) {
  const double u = dp.hbar * dp.omega * beta * std::exp(dp.eta);
  const double v = dp.hbar * dp.omega * beta * std::exp(-dp.eta);
  return std::log(dp.m * dp.omega / (2.0 * std::numbers::pi * dp.hbar)) +
         beta * dp.e0 - 0.5 * (log_sinh(u) + log_sinh(v));
}

}  // namespace detail

/// Full density matrix rho^{AB}(x1b, x2b, x1a, x2a; beta).
inline double density_matrix(const DecoupledParams& dp, double beta,
                             const Eigen::Vector2d& xb, const Eigen::Vector2d& xa) {
  detail::require_positive_beta(beta);
  const PropagatorCoeffs p = propagator_coeffs(dp, beta);
  const double expo = -p.a * (xb(0) * xb(0) + xa(0) * xa(0)) -
                      p.b * (xb(1) * xb(1) + xa(1) * xa(1)) +
                      2 * p.c * (xb(0) * xb(1) + xa(0) * xa(1)) +
                      2 * p.d * xb(0) * xa(0) + 2 * p.f * xb(1) * xa(1) -
                      2 * p.g * (xb(0) * xa(1) + xa(0) * xb(1));
  return std::exp(detail::density_log_prefactor(dp, beta) + expo);
}

inline DiagonalCoeffs diagonal_coeffs(const DecoupledParams& dp, double beta) {
  detail::require_positive_beta(beta);
  const double ep = std::exp(dp.eta), em = std::exp(-dp.eta);
  const double half = dp.hbar * dp.omega * beta / 2.0;
  const double tp = std::tanh(half * ep), tm = std::tanh(half * em);
  const double s0 = dp.m * dp.omega / dp.hbar;
  const double mu2 = dp.mu * dp.mu;
  const double c2 = std::cos(dp.theta / 2) * std::cos(dp.theta / 2);
  const double s2 = std::sin(dp.theta / 2) * std::sin(dp.theta / 2);
  const double cs = std::cos(dp.theta / 2) * std::sin(dp.theta / 2);
  return DiagonalCoeffs{mu2 * s0 * (ep * tp * c2 + em * tm * s2),
                        s0 / mu2 * (ep * tp * s2 + em * tm * c2),
                        s0 * (ep * tp - em * tm) * cs,
                        detail::density_log_prefactor(dp, beta)};
}

/// Diagonal of the density matrix, P_beta(x1, x2). As printed it is not
/// normalized over (x1, x2); pass normalized = true to divide by the Gaussian
/// integral of the kernel.
inline double probability_density(const DecoupledParams& dp, double beta,
                                  double x1, double x2, bool normalized = false) {
  const DiagonalCoeffs d = diagonal_coeffs(dp, beta);
  double log_norm = d.log_norm;
  if (normalized) {
    QuadKernel<double> k(d.log_norm, (Eigen::Matrix2d() << d.a_tilde, -d.c_tilde,
                                      -d.c_tilde, d.b_tilde)
                                         .finished());
    log_norm -= std::log(integrate_all(k));
  }
  return std::exp(log_norm - d.a_tilde * x1 * x1 - d.b_tilde * x2 * x2 +
                  2 * d.c_tilde * x1 * x2);
}

/// High-temperature Boltzmann form, prefactor included:
/// (m / 2*pi*hbar^2*beta0) * e^{+beta0 E0} * exp(-beta0 V(x1, x2)).
inline double classical_density(const OscillatorParams& p, double beta0,
                                double x1, double x2) {
  detail::require_positive_beta(beta0);
  const DecoupledParams dp = derive_decoupled(p);
  const double potential =
      0.5 * (p.c1 * x1 * x1 + p.c2 * x2 * x2 + p.c3 * x1 * x2);
  return dp.m /
         (2.0 * std::numbers::pi * p.hbar * p.hbar * beta0) *
         std::exp(beta0 * dp.e0 - beta0 * potential);
}

/// Ground-state wavefunction: a unit Gaussian in the decoupled coordinates,
/// with exp(+-eta) scaling the two normal modes.
inline double ground_state(const DecoupledParams& dp, double x1, double x2) {
  const double c = std::cos(dp.theta / 2), s = std::sin(dp.theta / 2);
  const double q1 = dp.mu * c * x1 - s / dp.mu * x2;
  const double q2 = dp.mu * s * x1 + c / dp.mu * x2;
  const double s0 = dp.m * dp.omega / (2.0 * dp.hbar);
  return std::sqrt(dp.m * dp.omega / (dp.hbar * std::numbers::pi)) *
         std::exp(-s0 * std::exp(dp.eta) * q1 * q1 -
                  s0 * std::exp(-dp.eta) * q2 * q2);
}

inline WavefunctionCoeffs wavefunction_coeffs(const DecoupledParams& dp, double beta) {
  detail::require_positive_beta(beta);
  const double ep = std::exp(dp.eta), em = std::exp(-dp.eta);
  const double u = dp.hbar * dp.omega * beta * ep;
  const double v = dp.hbar * dp.omega * beta * em;
  const double tp = std::tanh(u), tm = std::tanh(v);
  const double s0 = dp.m * dp.omega / (2.0 * dp.hbar);
  const double mu2 = dp.mu * dp.mu;
  const double c2 = std::cos(dp.theta / 2) * std::cos(dp.theta / 2);
  const double s2 = std::sin(dp.theta / 2) * std::sin(dp.theta / 2);
  const double cs = std::cos(dp.theta / 2) * std::sin(dp.theta / 2);
  const double log_norm =
      0.5 * std::log(dp.m * dp.omega / (4.0 * std::numbers::pi * dp.hbar)) -
      0.5 * (detail::log_cosh(u) + detail::log_cosh(v)) +
      beta * dp.hbar * dp.omega * std::cosh(dp.eta);
  return WavefunctionCoeffs{mu2 * s0 * (ep * tp * c2 + em * tm * s2),
                            s0 / mu2 * (ep * tp * s2 + em * tm * c2),
                            s0 * (ep * tp - em * tm) * cs, log_norm};
}

/// Beta-dependent wavefunction of the whole spectrum; solves the
/// imaginary-time Schroedinger equation with the energy shifted by E0.
inline double wavefunction(const DecoupledParams& dp, double beta,
                           double x1, double x2) {
  const WavefunctionCoeffs w = wavefunction_coeffs(dp, beta);
  return std::exp(w.log_norm - w.alpha_tilde * x1 * x1 - w.beta_tilde * x2 * x2 +
                  2 * w.gamma_tilde * x1 * x2);
}

/// One-particle reduced density matrix, normalized to unit trace.
inline double reduced_density(const DecoupledParams& dp, double beta,
                              double x1, double x1p) {
  const WavefunctionCoeffs w = wavefunction_coeffs(dp, beta);
  const double det = w.alpha_tilde * w.beta_tilde - w.gamma_tilde * w.gamma_tilde;
  const double norm = std::sqrt(2.0 * det / (std::numbers::pi * w.beta_tilde));
  const double diag = (2.0 * w.alpha_tilde * w.beta_tilde -
                       w.gamma_tilde * w.gamma_tilde) /
                      (2.0 * w.beta_tilde);
  const double cross = w.gamma_tilde * w.gamma_tilde / w.beta_tilde;
  return norm * std::exp(-diag * (x1 * x1 + x1p * x1p) + cross * x1 * x1p);
}

}  // namespace thermopurity
