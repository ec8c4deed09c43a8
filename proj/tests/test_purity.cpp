#include <doctest.h>

#include <cmath>
#include <numbers>

#include "thermopurity/model.hpp"
#include "thermopurity/purity.hpp"

using namespace thermopurity;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("purity_closed basic values") {
  for (double theta : {0.0, 1.0, kPi})
    for (double beta : {0.2, 1.0, 30.0})
      CHECK(purity_closed(0.0, theta, beta) == doctest::Approx(1.0).epsilon(1e-14));

  CHECK(purity_closed(std::log(2.0), kPi / 2, 50.0) ==
        doctest::Approx(0.8).epsilon(1e-9));
  CHECK(std::abs(purity_closed(1.0, kPi / 2, 1.0) - 0.4185) < 5e-4);
  CHECK(purity_closed(1.0, kPi / 2, 1.0) ==
        doctest::Approx(0.4183982974674125).epsilon(1e-12));
  CHECK_THROWS_AS(purity_closed(1.0, 1.0, 0.0), NonPositiveBeta);
  CHECK_THROWS_AS(purity_closed(1.0, 1.0, -2.0), NonPositiveBeta);
}

TEST_CASE("purity_from_coeffs values and error handling") {
  CHECK(purity_from_coeffs(WavefunctionCoeffs{1.0, 2.0, 0.0, 0.0}) ==
        doctest::Approx(1.0).epsilon(1e-14));

  const WavefunctionCoeffs low =
      wavefunction_coeffs(from_decoupled(std::log(2.0), kPi / 2), 50.0);
  CHECK(purity_from_coeffs(low) == doctest::Approx(0.8).epsilon(1e-9));

  const WavefunctionCoeffs two =
      wavefunction_coeffs(from_decoupled(2.0, kPi / 3), 1.0);
  CHECK(purity_from_coeffs(two) ==
        doctest::Approx(purity_closed(2.0, kPi / 3, 1.0)).epsilon(1e-12));
  CHECK(purity_from_coeffs(two) ==
        doctest::Approx(0.11416123498884692).epsilon(1e-12));

  CHECK_THROWS_AS(purity_from_coeffs(WavefunctionCoeffs{-1.0, 2.0, 0.0, 0.0}),
                  DegenerateKernel);
  CHECK_THROWS_AS(purity_from_coeffs(WavefunctionCoeffs{1.0, 1.0, 1.5, 0.0}),
                  DegenerateKernel);
}

TEST_CASE("purity_low_t values and degenerate angles") {
  CHECK(purity_low_t(0.0, kPi / 2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(purity_low_t(std::log(2.0), kPi / 2) == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(purity_low_t(1.0, kPi / 3) ==
        doctest::Approx(purity_closed(1.0, kPi / 3, 50.0)).epsilon(1e-6));
  for (double theta : {0.0, kPi, 2 * kPi})
    CHECK(purity_low_t(1.7, theta) == 1.0);
}

TEST_CASE("purity_high_t values and relation to the low-T form") {
  for (double theta : {0.3, kPi / 2, 2.9})
    CHECK(purity_high_t(0.0, theta) == doctest::Approx(1.0).epsilon(1e-14));

  CHECK(purity_high_t(1.0, kPi / 3) ==
        doctest::Approx(purity_low_t(2.0, kPi / 3)).epsilon(1e-12));

  const DecoupledParams dp = derive_decoupled(OscillatorParams{1, 1, 1, 1, 1, 1});
  CHECK(purity_high_t(dp.eta, dp.theta) ==
        doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
}

TEST_CASE("purity_identical values and consistency with purity_closed") {
  for (double beta : {0.1, 1.0, 20.0})
    CHECK(purity_identical(1.0, 0.0, 1.0, 1.0, beta) ==
          doctest::Approx(1.0).epsilon(1e-14));

  CHECK(purity_identical(1.0, 30.0 / 17.0, 1.0, 1.0, 50.0) ==
        doctest::Approx(0.8).epsilon(1e-6));

  const DecoupledParams dp = derive_decoupled(OscillatorParams{1, 1, 1, 1, 1, 1});
  const double direct = purity_identical(1.0, 1.0, 1.0, 1.0, 1.0);
  CHECK(direct ==
        doctest::Approx(purity_closed(dp.eta, kPi / 2, dp.hbar * dp.omega * 1.0))
            .epsilon(1e-10));
  CHECK(direct == doctest::Approx(0.9118712545429549).epsilon(1e-12));

  CHECK_THROWS_AS(purity_identical(1.0, 2.0, 1.0, 1.0, 1.0), UnstablePotential);
  CHECK_THROWS_AS(purity_identical(1.0, -2.5, 1.0, 1.0, 1.0), UnstablePotential);
  CHECK_THROWS_AS(purity_identical(0.0, 0.0, 1.0, 1.0, 1.0), NonPositiveParameter);
  CHECK_THROWS_AS(purity_identical(1.0, 0.0, 1.0, 1.0, 0.0), NonPositiveBeta);
}

TEST_CASE("linear_entropy values and range checks") {
  CHECK(linear_entropy(1.0, 2) == doctest::Approx(0.0));
  CHECK(linear_entropy(1.0, 7) == doctest::Approx(0.0));
  CHECK(linear_entropy(0.5, 2) == doctest::Approx(1.0));
  CHECK(linear_entropy(0.25, 4) == doctest::Approx(1.0));
  CHECK(linear_entropy(0.8, 2) == doctest::Approx(0.4).epsilon(1e-14));
  CHECK_THROWS_AS(linear_entropy(0.3, 2), OutOfRange);
  CHECK_THROWS_AS(linear_entropy(1.2, 2), OutOfRange);
  CHECK_THROWS_AS(linear_entropy(0.9, 1), OutOfRange);
}

TEST_CASE("range, symmetry and two-path agreement on the sweep grid") {
  for (int ie = 0; ie < 20; ++ie)
    for (int it = 0; it < 20; ++it) {
      const double eta = -4.0 + 8.0 * ie / 19.0;
      const double theta = 2 * kPi * it / 19.0;
      double prev = 0.0;
      for (int ib = 0; ib < 10; ++ib) {
        const double beta = 0.1 + (50.0 - 0.1) * ib / 9.0;
        const double p = purity_closed(eta, theta, beta);
        CHECK(p > 0.0);
        CHECK(p <= 1.0 + 1e-15);
        CHECK(purity_closed(-eta, theta, beta) == doctest::Approx(p).epsilon(1e-12));
        CHECK(purity_closed(eta, 2 * kPi - theta, beta) ==
              doctest::Approx(p).epsilon(1e-12));
        CHECK(purity_closed(eta, kPi - theta, beta) ==
              doctest::Approx(p).epsilon(1e-12));
        CHECK(purity_from_coeffs(wavefunction_coeffs(from_decoupled(eta, theta),
                                                     beta)) ==
              doctest::Approx(p).epsilon(1e-12));
        CHECK(p + 1e-12 >= prev);  // non-decreasing in beta
        prev = p;
      }
    }
}

TEST_CASE("temperature-limit agreement away from degenerate angles") {
  for (int ie = 0; ie < 20; ++ie)
    for (int it = 0; it < 20; ++it) {
      const double eta = -1.5 + 3.0 * ie / 19.0;
      const double theta = 0.05 + (kPi - 0.1) * it / 19.0;
      CHECK(std::abs(purity_closed(eta, theta, 50.0) - purity_low_t(eta, theta)) <
            1e-6);
      CHECK(std::abs(purity_closed(eta, theta, 1e-3) - purity_high_t(eta, theta)) <
            1e-4);
      CHECK(purity_high_t(eta, theta) ==
            doctest::Approx(purity_low_t(2 * eta, theta)).epsilon(1e-12));
    }
}

TEST_CASE("weak coupling is exactly separable") {
  for (double c1 : {0.5, 1.0, 4.0})
    for (double m1 : {0.3, 1.0, 2.5}) {
      const DecoupledParams dp =
          derive_decoupled(OscillatorParams{m1, 1.0, c1, 1.0, 0.0, 1.0});
      for (double beta : {0.2, 1.0, 10.0})
        CHECK(purity_closed(dp.eta, dp.theta, beta) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("strong coupling collapses the purity") {
  double prev = 1.0;
  for (double delta : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
    const DecoupledParams dp = derive_decoupled(
        OscillatorParams{1.0, 1.0, 1.0, 1.0, 2.0 * (1.0 - delta), 1.0});
    const double p = purity_closed(dp.eta, dp.theta, 1.0);
    CHECK(p < prev);
    prev = p;
  }
  CHECK(prev < 0.05);
  CHECK(prev == doctest::Approx(0.008671305576464058).epsilon(1e-10));
}
