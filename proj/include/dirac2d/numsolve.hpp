#ifndef DIRAC2D_NUMSOLVE_HPP
#define DIRAC2D_NUMSOLVE_HPP

// Finite-difference radial eigensolver: 3-point Laplacian, Sturm-sequence
// bisection for eigenvalues, inverse iteration for eigenvectors and
// composite-Simpson quadrature. Everything here is independent of the
// closed-form models so it can serve as their oracle.

#include "dirac2d/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace dirac2d {

template <typename Scalar>
using SampleVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Left-end boundary condition. Dirichlet pins f(r_min) = 0. Robin imposes
/// f'(r_min) + beta f(r_min) = 0; with beta = W(r_min) this is the condition
/// that the lowering operator annihilates the state at the wall.
struct LeftBoundary {
  enum class Kind { Dirichlet, Robin };
  Kind kind = Kind::Dirichlet;
  double beta = 0.0;

  static LeftBoundary dirichlet() { return {}; }
  static LeftBoundary robin(double beta) { return {Kind::Robin, beta}; }
};

/// Symmetric tridiagonal discretization of -d^2/dr^2 + V on a RadialGrid.
/// Unknown j sits at grid index `offset + j`; the first unknown is scaled by
/// `head_scale` (sqrt(2) for the symmetrized Robin row, 1 otherwise).
template <typename Scalar>
struct TridiagonalOperator {
  SampleVector<Scalar> diag;
  SampleVector<Scalar> off;
  RadialGrid grid;
  Index offset = 1;
  Scalar head_scale = Scalar(1);

  Index size() const { return diag.size(); }

  /// Scatter an unknown vector back onto the full grid (Dirichlet ends = 0).
  SampleVector<Scalar> to_grid(const SampleVector<Scalar>& x) const {
    SampleVector<Scalar> f = SampleVector<Scalar>::Zero(grid.size());
    f.segment(offset, x.size()) = x;
    f[offset] *= head_scale;
    return f;
  }
};

/// Composite Simpson on the grid; for an even number of points the last
/// interval is closed with the trapezoid rule.
template <typename Derived>
typename Derived::Scalar quadrature(const Eigen::MatrixBase<Derived>& f, const RadialGrid& grid) {
  using Scalar = typename Derived::Scalar;
  const Index n = f.size();
  if (n != grid.size()) throw ConfigError("quadrature: sample count does not match grid");
  const Scalar h = Scalar(grid.spacing());
  const Index simpson_end = (n % 2 == 1) ? n - 1 : n - 2;  // last index covered by Simpson
  Scalar sum = Scalar(0);
  if (simpson_end >= 2) {
    Scalar odd = Scalar(0), even = Scalar(0);
    for (Index i = 1; i < simpson_end; i += 2) odd += f[i];
    for (Index i = 2; i < simpson_end; i += 2) even += f[i];
    sum = h / Scalar(3) * (f[0] + Scalar(4) * odd + Scalar(2) * even + f[simpson_end]);
  }
  if (simpson_end != n - 1) sum += h / Scalar(2) * (f[n - 2] + f[n - 1]);
  return sum;
}

/// sqrt(int f^2 dr).
template <typename Derived>
typename Derived::Scalar l2_norm(const Eigen::MatrixBase<Derived>& f, const RadialGrid& grid) {
  return std::sqrt(quadrature(f.cwiseAbs2(), grid));
}

/// int f g dr.
template <typename A, typename B>
typename A::Scalar inner_product(const Eigen::MatrixBase<A>& f, const Eigen::MatrixBase<B>& g,
                                 const RadialGrid& grid) {
  return quadrature(f.cwiseProduct(g), grid);
}

template <typename Scalar>
TridiagonalOperator<Scalar> discretize(const SampleVector<Scalar>& v_samples, const RadialGrid& grid,
                                       LeftBoundary left = LeftBoundary::dirichlet()) {
  if (v_samples.size() != grid.size()) {
    throw ConfigError("discretize: potential sample count does not match grid");
  }
  const Index n_points = grid.size();
  const Scalar h = Scalar(grid.spacing());
  const Scalar inv_h2 = Scalar(1) / (h * h);
  const bool robin = left.kind == LeftBoundary::Kind::Robin;
  const Index offset = robin ? 0 : 1;
  const Index n = n_points - 1 - offset;

  for (Index i = offset; i < offset + n; ++i) {
    if (!std::isfinite(static_cast<double>(v_samples[i]))) {
      throw DomainError("discretize: non-finite potential sample at r = " +
                        std::to_string(grid.r(i)));
    }
  }

  TridiagonalOperator<Scalar> op{SampleVector<Scalar>(n), SampleVector<Scalar>::Constant(n - 1, -inv_h2),
                                 grid, offset, Scalar(1)};
  op.diag = (Scalar(2) * inv_h2 + v_samples.segment(offset, n).array()).matrix();
  if (robin) {
    // Ghost point f_{-1} = f_1 + 2 h beta f_0, then a diagonal similarity
    // diag(1/sqrt2, 1, ...) restores symmetry of the first row/column.
    op.diag[0] -= Scalar(2) * Scalar(left.beta) / h;
    op.off[0] = -std::sqrt(Scalar(2)) * inv_h2;
    op.head_scale = std::sqrt(Scalar(2));
  }
  return op;
}

/// Number of eigenvalues strictly below lambda (negative pivots of the
/// LDL^T factorization of T - lambda I).
template <typename Scalar>
Index sturm_count(const TridiagonalOperator<Scalar>& op, Scalar lambda) {
  const Index n = op.size();
  const Scalar tiny = std::numeric_limits<Scalar>::min() / std::numeric_limits<Scalar>::epsilon();
  Index count = 0;
  Scalar q = op.diag[0] - lambda;
  for (Index i = 0;; ++i) {
    if (q == Scalar(0)) q = -tiny;
    if (q < Scalar(0)) ++count;
    if (i + 1 == n) break;
    q = op.diag[i + 1] - lambda - op.off[i] * op.off[i] / q;
  }
  return count;
}

template <typename Scalar>
std::pair<Scalar, Scalar> gershgorin_bounds(const TridiagonalOperator<Scalar>& op) {
  const Scalar max_off = op.off.size() > 0 ? op.off.cwiseAbs().maxCoeff() : Scalar(0);
  return {op.diag.minCoeff() - Scalar(2) * max_off, op.diag.maxCoeff() + Scalar(2) * max_off};
}

/// The k smallest eigenvalues, ascending, each bisected to an interval of
/// width < tol.
template <typename Scalar>
std::vector<Scalar> lowest_eigenvalues(const TridiagonalOperator<Scalar>& op, Index k, Scalar tol) {
  if (k < 1 || k > op.size()) throw ConfigError("lowest_eigenvalues: k must be in [1, N]");
  if (!(tol > 0)) throw ConfigError("lowest_eigenvalues: tol must be > 0");
  constexpr int kMaxIterations = 500;
  const auto [lo0, hi0] = gershgorin_bounds(op);
  std::vector<Scalar> values;
  values.reserve(static_cast<std::size_t>(k));
  Scalar floor = lo0;
  for (Index j = 0; j < k; ++j) {
    Scalar lo = floor, hi = hi0;
    int it = 0;
    while (hi - lo >= tol) {
      const Scalar mid = lo + (hi - lo) / Scalar(2);
      if (mid <= lo || mid >= hi) break;  // interval at floating-point resolution
      if (sturm_count(op, mid) > j) {
        hi = mid;
      } else {
        lo = mid;
      }
      if (++it > kMaxIterations) throw NumericError("lowest_eigenvalues: bisection did not converge");
    }
    if (hi - lo >= tol && hi - lo > Scalar(4) * std::numeric_limits<Scalar>::epsilon() * std::abs(hi)) {
      throw NumericError("lowest_eigenvalues: tolerance below floating-point resolution");
    }
    values.push_back(lo + (hi - lo) / Scalar(2));
    floor = lo;
  }
  return values;
}

namespace detail {

/// LU with partial pivoting of a general tridiagonal matrix (sub, diag,
/// super), after LAPACK's gttrf. Returns false on an exactly zero pivot.
template <typename Scalar>
struct TridiagonalLU {
  SampleVector<Scalar> dl, d, du, du2;
  std::vector<bool> swapped;

  bool factor(SampleVector<Scalar> sub, SampleVector<Scalar> main, SampleVector<Scalar> super) {
    dl = std::move(sub);
    d = std::move(main);
    du = std::move(super);
    const Index n = d.size();
    du2 = SampleVector<Scalar>::Zero(std::max<Index>(n - 2, 0));
    swapped.assign(static_cast<std::size_t>(std::max<Index>(n - 1, 0)), false);
    for (Index i = 0; i + 1 < n; ++i) {
      if (std::abs(d[i]) >= std::abs(dl[i])) {
        if (d[i] == Scalar(0)) return false;
        const Scalar fact = dl[i] / d[i];
        dl[i] = fact;
        d[i + 1] -= fact * du[i];
      } else {
        const Scalar fact = d[i] / dl[i];
        d[i] = dl[i];
        dl[i] = fact;
        const Scalar temp = du[i];
        du[i] = d[i + 1];
        d[i + 1] = temp - fact * d[i + 1];
        if (i + 2 < n) {
          du2[i] = du[i + 1];
          du[i + 1] = -fact * du[i + 1];
        }
        swapped[static_cast<std::size_t>(i)] = true;
      }
    }
    return n == 0 || d[n - 1] != Scalar(0);
  }

  void solve(SampleVector<Scalar>& b) const {
    const Index n = d.size();
    for (Index i = 0; i + 1 < n; ++i) {
      if (swapped[static_cast<std::size_t>(i)]) std::swap(b[i], b[i + 1]);
      b[i + 1] -= dl[i] * b[i];
    }
    b[n - 1] /= d[n - 1];
    if (n > 1) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for (Index i = n - 3; i >= 0; --i) {
      b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
    }
  }
};

template <typename Scalar>
SampleVector<Scalar> apply_shifted(const TridiagonalOperator<Scalar>& op, Scalar lambda,
                                   const SampleVector<Scalar>& x) {
  const Index n = op.size();
  SampleVector<Scalar> y = ((op.diag.array() - lambda) * x.array()).matrix();
  if (n > 1) {
    y.head(n - 1) += op.off.cwiseProduct(x.tail(n - 1));
    y.tail(n - 1) += op.off.cwiseProduct(x.head(n - 1));
  }
  return y;
}

/// Flip so the first significant entry (the first lobe) is positive.
template <typename Scalar>
void fix_sign(SampleVector<Scalar>& f) {
  const Scalar cut = Scalar(1e-3) * f.cwiseAbs().maxCoeff();
  for (Index i = 0; i < f.size(); ++i) {
    if (std::abs(f[i]) > cut) {
      if (f[i] < Scalar(0)) f = -f;
      return;
    }
  }
}

}  // namespace detail

/// ||(T - lambda) x||_2 / ||x||_2 in the operator's own coordinates.
template <typename Scalar>
Scalar eigen_residual(const TridiagonalOperator<Scalar>& op, Scalar lambda, const SampleVector<Scalar>& x) {
  return detail::apply_shifted(op, lambda, x).norm() / x.norm();
}

/// Eigenvector in the operator's unknown coordinates (unit 2-norm) by
/// inverse iteration from the all-ones seed.
template <typename Scalar>
SampleVector<Scalar> eigenvector_coefficients(const TridiagonalOperator<Scalar>& op, Scalar lambda) {
  constexpr int kIterations = 5;
  constexpr int kRetries = 4;
  const Index n = op.size();
  const Scalar scale = std::max(Scalar(1), std::abs(lambda));
  Scalar shift = lambda;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    detail::TridiagonalLU<Scalar> lu;
    if (!lu.factor(op.off, (op.diag.array() - shift).matrix(), op.off)) {
      shift += Scalar(16) * std::numeric_limits<Scalar>::epsilon() * scale * Scalar(attempt + 1);
      continue;
    }
    SampleVector<Scalar> x = SampleVector<Scalar>::Ones(n);
    if (attempt > 0) {
      // Seed with components along every eigenvector when the all-ones seed
      // happens to be orthogonal to the target.
      for (Index i = 0; i < n; ++i) x[i] += Scalar(0.5) * std::sin(Scalar(i + 1));
    }
    x.normalize();
    bool finite = true;
    for (int it = 0; it < kIterations; ++it) {
      lu.solve(x);
      const Scalar norm = x.norm();
      if (!std::isfinite(static_cast<double>(norm)) || norm == Scalar(0)) {
        finite = false;
        break;
      }
      x /= norm;
    }
    if (finite && eigen_residual(op, lambda, x) < Scalar(1e-6) * scale) return x;
    shift += Scalar(16) * std::numeric_limits<Scalar>::epsilon() * scale * Scalar(attempt + 1);
  }
  throw NumericError("eigenvector: inverse iteration failed to converge");
}

/// Grid eigenfunction for eigenvalue lambda: quadrature-normalized, first
/// lobe positive.
template <typename Scalar>
SampleVector<Scalar> eigenvector(const TridiagonalOperator<Scalar>& op, Scalar lambda) {
  SampleVector<Scalar> f = op.to_grid(eigenvector_coefficients(op, lambda));
  f /= l2_norm(f, op.grid);
  detail::fix_sign(f);
  return f;
}

/// One-step convenience: the k lowest (eigenvalue, grid eigenfunction) pairs.
template <typename Scalar>
struct Eigenpairs {
  std::vector<Scalar> values;
  std::vector<SampleVector<Scalar>> vectors;
};

template <typename Scalar>
Eigenpairs<Scalar> lowest_eigenpairs(const TridiagonalOperator<Scalar>& op, Index k, Scalar tol) {
  Eigenpairs<Scalar> out{lowest_eigenvalues(op, k, tol), {}};
  for (const Scalar lambda : out.values) out.vectors.push_back(eigenvector(op, lambda));
  return out;
}

struct PartnerPotentials;

struct IsospectralReport {
  std::vector<double> lower;       // k eigenvalues of V-
  std::vector<double> upper;       // k-1 eigenvalues of V+
  std::vector<double> deviations;  // |upper[i] - lower[i+1]|
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed() const { return max_deviation <= tolerance; }
};

/// Compares the k lowest levels of V- with the k-1 lowest of V+, expecting
/// upper[i] == lower[i+1] (the lower partner keeps the extra zero mode).
IsospectralReport isospectral_check(const PartnerPotentials& pp, Index k, double tol);

}  // namespace dirac2d

#endif  // DIRAC2D_NUMSOLVE_HPP
