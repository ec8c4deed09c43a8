#pragma once

#include <Eigen/Dense>

#include "thermopurity/errors.hpp"
#include "thermopurity/model.hpp"

namespace thermopurity {

/// Square sampling grid; half_extent is measured in thermal widths of the
/// widest mode at the evaluation beta, so the physical extent is fixed only
/// when a grid is bound to (dp, beta).
struct Grid2D {
  double half_extent = 8.0;
  int n = 257;

  Grid2D() = default;
  Grid2D(double half_extent_widths, int points)
      : half_extent(half_extent_widths), n(points) {
    if (n < 65 || n % 2 == 0)
      throw std::invalid_argument("grid must have an odd point count >= 65");
  }
};

/// Sampled real field on a grid bound to a physical half-length.
struct Field2D {
  Grid2D grid;
  double length = 0.0;  // physical half-extent
  Eigen::MatrixXd values;  // values(i, j) = f(x_i, x_j)

  double spacing() const { return 2.0 * length / (grid.n - 1); }
  double x(int i) const { return -length + i * spacing(); }
};

/// Thermal width of the widest marginal, sqrt(hbar / (m w e^-|eta| tanh(hbar w beta e^-|eta|))).
double thermal_width(const DecoupledParams& dp, double beta);

/// Width of the narrowest mode; sets the resolution requirement.
double narrow_width(const DecoupledParams& dp, double beta);

struct QuadraturePurity {
  double value;
  double est_error;  // grid-dependent tolerance estimate (truncation + aliasing)
};

/// Purity by trapezoid quadrature over the sampled wavefunction: forms the
/// normalized reduced density on the grid and traces its square. Independent
/// of the closed-form purity path.
QuadraturePurity purity_quadrature(const DecoupledParams& dp, double beta,
                                   const Grid2D& grid);

/// Trotterized imaginary-time propagation from beta_start to beta_end with a
/// split-step spectral kinetic factor, starting from the sampled
/// beta = beta_start wavefunction. The energy shift E0 is applied each step so
/// the field amplitude stays O(1).
Field2D imaginary_time_evolve(const DecoupledParams& dp, const Grid2D& grid,
                              double beta_start, double beta_end, int steps);

/// Continue a propagation from an existing field.
Field2D imaginary_time_evolve_from(Field2D field, const DecoupledParams& dp,
                                   double beta_start, double beta_end, int steps);

/// Max over interior nodes (within two widths of the narrowest marginal) of
/// |(H - E0) psi + d(psi)/d(beta)| / |psi|, with central finite differences in
/// space (stencil step = grid spacing / 64) and a five-point stencil in beta.
double schrodinger_residual(const DecoupledParams& dp, double beta,
                            const Grid2D& grid);

}  // namespace thermopurity
