#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "thermopurity/errors.hpp"

namespace thermopurity {

/// Multivariate Gaussian kernel prefactor * exp(-x^T quad x), with the
/// prefactor kept in log space. quad must be symmetric; definiteness is only
/// required where an integral is actually taken, so intermediate kernels may
/// be indefinite.
template <typename Scalar = double>
struct QuadKernel {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Scalar log_prefactor{0};
  Matrix quad;

  QuadKernel() = default;
  QuadKernel(Scalar log_pref, Matrix q) : log_prefactor(log_pref), quad(std::move(q)) {
    if (quad.rows() != quad.cols())
      throw std::invalid_argument("quad must be square");
    if (!quad.isApprox(quad.transpose(), Scalar(1e-14)))
      throw std::invalid_argument("quad must be symmetric");
  }

  Eigen::Index dim() const { return quad.rows(); }
};

namespace detail {

// Cholesky with an explicit pivot floor; dim <= 4 in this artifact.
template <typename Scalar>
Scalar log_det_positive(const typename QuadKernel<Scalar>::Matrix& q) {
  auto a = q.eval();
  const Eigen::Index n = a.rows();
  Scalar log_det{0};
  for (Eigen::Index j = 0; j < n; ++j) {
    Scalar pivot = a(j, j);
    for (Eigen::Index k = 0; k < j; ++k) pivot -= a(j, k) * a(j, k);
    if (!(pivot > Scalar(1e-12)))
      throw NotPositiveDefinite("quadratic form is not positive definite");
    const Scalar l = std::sqrt(pivot);
    a(j, j) = l;
    log_det += Scalar(2) * std::log(l);
    for (Eigen::Index i = j + 1; i < n; ++i) {
      Scalar v = a(i, j);
      for (Eigen::Index k = 0; k < j; ++k) v -= a(i, k) * a(j, k);
      a(i, j) = v / l;
    }
  }
  return log_det;
}

}  // namespace detail

/// Integral of the kernel over all of R^dim:
/// prefactor * pi^(dim/2) / sqrt(det(quad)).
template <typename Scalar>
Scalar integrate_all(const QuadKernel<Scalar>& kernel) {
  const Scalar log_det = detail::log_det_positive<Scalar>(kernel.quad);
  const Scalar log_value = kernel.log_prefactor +
                           Scalar(0.5) * Scalar(kernel.dim()) * std::log(Scalar(std::numbers::pi)) -
                           Scalar(0.5) * log_det;
  return std::exp(log_value);
}

/// Exact Gaussian integration over one variable. The reduced form is the
/// Schur complement of the indexed diagonal entry; the prefactor gains
/// sqrt(pi / quad[i][i]).
template <typename Scalar>
QuadKernel<Scalar> marginalize(const QuadKernel<Scalar>& kernel, Eigen::Index index) {
  const Eigen::Index n = kernel.dim();
  if (index < 0 || index >= n) throw std::invalid_argument("marginalize: index out of range");
  const Scalar qii = kernel.quad(index, index);
  if (!(qii > Scalar(0)))
    throw NonIntegrableDirection("diagonal entry must be positive to integrate out");

  typename QuadKernel<Scalar>::Matrix rest(n - 1, n - 1);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> col(n - 1);
  for (Eigen::Index i = 0, ii = 0; i < n; ++i) {
    if (i == index) continue;
    col(ii) = kernel.quad(i, index);
    for (Eigen::Index j = 0, jj = 0; j < n; ++j) {
      if (j == index) continue;
      rest(ii, jj) = kernel.quad(i, j);
      ++jj;
    }
    ++ii;
  }
  typename QuadKernel<Scalar>::Matrix reduced =
      rest - (col * col.transpose()) / qii;
  reduced = ((reduced + reduced.transpose()) / Scalar(2)).eval();
  const Scalar log_pref =
      kernel.log_prefactor + Scalar(0.5) * std::log(Scalar(std::numbers::pi) / qii);
  return QuadKernel<Scalar>(log_pref, std::move(reduced));
}

/// For two-point kernels A(x, x') and B(x, x'):
/// integral of A(x, x') * B(x', x) over dx dx'.
template <typename Scalar>
Scalar trace_product(const QuadKernel<Scalar>& a, const QuadKernel<Scalar>& b) {
  if (a.dim() != 2 || b.dim() != 2)
    throw std::invalid_argument("trace_product expects two-point kernels");
  typename QuadKernel<Scalar>::Matrix swapped(2, 2);
  swapped << b.quad(1, 1), b.quad(0, 1), b.quad(1, 0), b.quad(0, 0);
  QuadKernel<Scalar> combined(a.log_prefactor + b.log_prefactor,
                              (a.quad + swapped).eval());
  return integrate_all(combined);
}

}  // namespace thermopurity
