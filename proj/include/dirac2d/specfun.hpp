#ifndef DIRAC2D_SPECFUN_HPP
#define DIRAC2D_SPECFUN_HPP

#include "dirac2d/core.hpp"

#include <cmath>

namespace dirac2d {

/// Associated Laguerre polynomial L_n^alpha(z) by the upward three-term
/// recurrence
///   k L_k = (2k - 1 + alpha - z) L_{k-1} - (k - 1 + alpha) L_{k-2}.
/// alpha may be any real; the recurrence is an identity of the polynomials.
template <typename Scalar>
Scalar laguerre(int n, Scalar alpha, Scalar z) {
  if (n < 0) throw DomainError("laguerre: degree must be >= 0");
  if (n == 0) return Scalar(1);
  Scalar prev = Scalar(1);
  Scalar curr = Scalar(1) + alpha - z;
  for (int k = 2; k <= n; ++k) {
    const Scalar next = ((Scalar(2 * k - 1) + alpha - z) * curr - (Scalar(k - 1) + alpha) * prev) /
                        Scalar(k);
    prev = curr;
    curr = next;
  }
  return curr;
}

/// Elementwise L_n^alpha over a sample vector.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> laguerre(
    int n, typename Derived::Scalar alpha, const Eigen::MatrixBase<Derived>& z) {
  using Scalar = typename Derived::Scalar;
  return z.unaryExpr([n, alpha](Scalar x) { return laguerre<Scalar>(n, alpha, x); });
}

/// ln Gamma(x) for x > 0.
double ln_gamma(double x);

}  // namespace dirac2d

#endif  // DIRAC2D_SPECFUN_HPP
