#include "thermopurity/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "thermopurity/model.hpp"
#include "thermopurity/oracle.hpp"
#include "thermopurity/purity.hpp"

namespace thermopurity {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + i * (hi - lo) / (n - 1);
  return v;
}

void add(VerifyReport& report, const std::string& name, double tolerance,
         double observed) {
  report.checks.push_back({name, tolerance, observed, observed < tolerance});
}

void quick_checks(VerifyReport& report, const VerifyOptions& options) {
  const auto etas = grid(-3.0, 3.0, 10);
  const auto thetas = grid(0.0, 2.0 * kPi, 10);
  const auto betas = grid(0.1, 50.0, 10);

  // shorthand identities a~ = 2(a-d), b~ = 2(b-f), c~ = 2(c-g)
  double worst_short = 0.0;
  for (double eta : etas)
    for (double theta : thetas)
      for (double beta : betas) {
        const DecoupledParams dp = from_decoupled(eta, theta);
        const PropagatorCoeffs p = propagator_coeffs(dp, beta);
        DiagonalCoeffs d = diagonal_coeffs(dp, beta);
        if (options.diag_mutator) d = options.diag_mutator(d);
        const double scale = 1.0 + 2.0 * (std::abs(p.a) + std::abs(p.d) +
                                          std::abs(p.b) + std::abs(p.f));
        worst_short = std::max(
            {worst_short, std::abs(d.a_tilde - 2 * (p.a - p.d)) / scale,
             std::abs(d.b_tilde - 2 * (p.b - p.f)) / scale,
             std::abs(d.c_tilde - 2 * (p.c - p.g)) / scale});
      }
  add(report, "shorthand identities a~=2(a-d), b~=2(b-f), c~=2(c-g)", 1e-12,
      worst_short);

  // doubling identity 2*alpha~(beta) = a~(2*beta)
  double worst_double = 0.0;
  for (double eta : etas)
    for (double theta : thetas)
      for (double beta : betas) {
        const DecoupledParams dp = from_decoupled(eta, theta);
        const WavefunctionCoeffs w = wavefunction_coeffs(dp, beta);
        const DiagonalCoeffs d = diagonal_coeffs(dp, 2.0 * beta);
        const double scale = 1.0 + std::abs(d.a_tilde) + std::abs(d.b_tilde);
        worst_double = std::max(
            {worst_double, std::abs(2 * w.alpha_tilde - d.a_tilde) / scale,
             std::abs(2 * w.beta_tilde - d.b_tilde) / scale,
             std::abs(2 * w.gamma_tilde - d.c_tilde) / scale});
      }
  add(report, "doubling identity 2a(beta)=a~(2beta)", 1e-12, worst_double);

  // two-path purity agreement
  double worst_path = 0.0;
  for (double eta : etas)
    for (double theta : thetas)
      for (double beta : betas) {
        const DecoupledParams dp = from_decoupled(eta, theta);
        worst_path = std::max(
            worst_path, std::abs(purity_from_coeffs(wavefunction_coeffs(dp, beta)) -
                                 purity_closed(eta, theta, beta)));
      }
  add(report, "two-path purity (coefficients vs closed form)", 1e-12, worst_path);

  // symmetries of the closed form
  double worst_sym = 0.0;
  for (double eta : etas)
    for (double theta : thetas)
      for (double beta : betas) {
        const double p = purity_closed(eta, theta, beta);
        worst_sym = std::max(
            {worst_sym, std::abs(purity_closed(-eta, theta, beta) - p),
             std::abs(purity_closed(eta, 2 * kPi - theta, beta) - p),
             std::abs(purity_closed(eta, kPi - theta, beta) - p)});
      }
  add(report, "symmetries eta->-eta, theta->2pi-theta, theta->pi-theta", 1e-12,
      worst_sym);

  // range and monotonicity in beta
  double range_violation = 0.0;
  double mono_violation = 0.0;
  for (double eta : etas)
    for (double theta : thetas) {
      double prev = 0.0;
      for (double beta : betas) {
        const double p = purity_closed(eta, theta, beta);
        if (!(p > 0.0 && p <= 1.0 + 1e-15)) range_violation = 1.0;
        if (p + 1e-12 < prev) mono_violation = std::max(mono_violation, prev - p);
        prev = p;
      }
    }
  add(report, "purity range (0, 1]", 0.5, range_violation);
  add(report, "purity non-decreasing in beta", 1e-12, mono_violation);

  // temperature-limit formulas (theta away from degenerate angles)
  double worst_low = 0.0, worst_high = 0.0, worst_rel = 0.0;
  for (double eta : grid(-1.5, 1.5, 20))
    for (double theta : grid(0.05, kPi - 0.05, 20)) {
      worst_low = std::max(worst_low, std::abs(purity_closed(eta, theta, 50.0) -
                                               purity_low_t(eta, theta)));
      worst_high = std::max(worst_high, std::abs(purity_closed(eta, theta, 1e-3) -
                                                 purity_high_t(eta, theta)));
      worst_rel = std::max(worst_rel, std::abs(purity_high_t(eta, theta) -
                                               purity_low_t(2 * eta, theta)));
    }
  add(report, "low-T limit matches purity_closed(beta=50)", 1e-6, worst_low);
  add(report, "high-T limit matches purity_closed(beta=1e-3)", 1e-4, worst_high);
  add(report, "relation P_high(eta)=P_low(2 eta)", 1e-12, worst_rel);

  // weak coupling: C3 = 0 is exactly separable
  double worst_weak = 0.0;
  for (double c1 : {0.5, 1.0, 4.0})
    for (double m1 : {0.3, 1.0, 2.5}) {
      const DecoupledParams dp =
          derive_decoupled(OscillatorParams{m1, 1.0, c1, 1.0, 0.0});
      worst_weak = std::max(
          worst_weak,
          std::abs(purity_closed(dp.eta, dp.theta, dp.hbar * dp.omega * 1.7) - 1.0));
    }
  add(report, "weak coupling C3=0 gives purity 1", 1e-12, worst_weak);

  // strong coupling: purity collapses as C3 -> 2 sqrt(C1 C2)
  double strong = 1.0;
  bool monotone = true;
  for (double delta : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
    const DecoupledParams dp = derive_decoupled(
        OscillatorParams{1.0, 1.0, 1.0, 1.0, 2.0 * (1.0 - delta)});
    const double p = purity_closed(dp.eta, dp.theta, 1.0);
    if (p >= strong) monotone = false;
    strong = p;
  }
  add(report, "strong coupling purity at delta=1e-6", 0.05, strong);
  add(report, "strong coupling monotone decrease", 0.5, monotone ? 0.0 : 1.0);
}

void full_checks(VerifyReport& report) {
  // quadrature oracle vs closed form
  double worst_quad = 0.0;
  const Grid2D fine(8.0, 257);
  for (const auto& [eta, theta, beta] :
       {std::tuple{1.0, kPi / 2, 1.0}, std::tuple{std::log(2.0), kPi / 2, 5.0},
        std::tuple{0.5, kPi / 3, 0.5}}) {
    const DecoupledParams dp = from_decoupled(eta, theta);
    worst_quad = std::max(worst_quad,
                          std::abs(purity_quadrature(dp, beta, fine).value -
                                   purity_closed(eta, theta, beta)));
  }
  add(report, "quadrature purity vs closed form", 1e-6, worst_quad);

  // imaginary-time Schroedinger residual
  double worst_res = 0.0;
  for (const auto& [eta, theta] : {std::pair{0.0, 0.0}, std::pair{1.0, kPi / 2}})
    worst_res = std::max(
        worst_res, schrodinger_residual(from_decoupled(eta, theta), 1.0, fine));
  add(report, "imaginary-time Schroedinger residual", 1e-4, worst_res);

  // short grid propagation against the closed-form wavefunction (shape check)
  const DecoupledParams dp = from_decoupled(0.0, 0.0);
  const Grid2D coarse(8.0, 135);
  const Field2D field = imaginary_time_evolve(dp, coarse, 5e-4, 2.0, 2000);
  double worst_prop = 0.0;
  const int mid = coarse.n / 2;
  const double ref =
      field.values(mid, mid) / wavefunction(dp, 2.0, 0.0, 0.0);
  for (int i = mid - 4; i <= mid + 4; ++i)
    for (int j = mid - 4; j <= mid + 4; ++j) {
      const double ratio = field.values(i, j) /
                           wavefunction(dp, 2.0, field.x(i), field.x(j));
      worst_prop = std::max(worst_prop, std::abs(ratio / ref - 1.0));
    }
  add(report, "grid propagation matches closed-form wavefunction", 1e-4,
      worst_prop);
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

VerifyReport verify(VerifyLevel level, const VerifyOptions& options) {
  VerifyReport report;
  quick_checks(report, options);
  if (level == VerifyLevel::full) full_checks(report);
  return report;
}

void print_report(const VerifyReport& report, std::ostream& out) {
  for (const CheckResult& c : report.checks)
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.name
        << "  (observed " << c.observed << ", tolerance " << c.tolerance << ")\n";
  out << (report.all_pass() ? "all checks passed" : "some checks FAILED") << '\n';
}

}  // namespace thermopurity
