#ifndef DIRAC2D_SUPERPOT_HPP
#define DIRAC2D_SUPERPOT_HPP

#include "dirac2d/core.hpp"
#include "dirac2d/numsolve.hpp"

#include <functional>

namespace dirac2d {

/// W(r) together with W'(r) and its assembly from the radial pieces
///   W = ell / r + e A(r) / hbar + v(r) / hbar.
/// `pole` is the total coefficient of 1/r in W, used to integrate the
/// singular part of W in closed form.
class Superpotential {
 public:
  using Function = std::function<double(double)>;

  Superpotential(Function w, Function w_prime, double ell, Function a_field, Function v_field,
                 double pole);

  double operator()(double r) const { return w_(r); }
  double derivative(double r) const { return w_prime_(r); }

  double ell_over_r() const { return ell_; }
  double a_field(double r) const { return a_field_(r); }
  double v_field(double r) const { return v_field_(r); }
  /// ell / r + a_field + v_field evaluated from the pieces.
  double assembled(double r) const;

  double pole() const { return pole_; }
  bool singular_at_origin() const { return pole_ != 0.0; }

  Vector sample(const RadialGrid& grid) const;
  Vector sample_derivative(const RadialGrid& grid) const;

 private:
  Function w_;
  Function w_prime_;
  double ell_;
  Function a_field_;
  Function v_field_;
  double pole_;
};

/// V- = W^2 - W' and V+ = W^2 + W' sampled on a grid. Eigenproblems are
/// -f'' + V-/+ f = eps^2 f. `w_left` is W(r_min), the Robin coefficient that
/// makes the lower problem's wall compatible with the lowering operator.
struct PartnerPotentials {
  RadialGrid grid;
  Vector v_minus;
  Vector v_plus;
  double w_left = 0.0;
};

/// Closed-form W of the model family (Custom: linear interpolation of the
/// tabulated samples).
Superpotential superpotential_from_model(const ModelSpec& model);

/// Throws DomainError if the grid touches r = 0 for a superpotential with a
/// 1/r pole (or lies outside a custom table).
PartnerPotentials partner_potentials(const Superpotential& w, const RadialGrid& grid);

/// Discretized -d^2/dr^2 + V- with the annihilating Robin wall at r_min.
TridiagonalOperator<double> lower_operator(const PartnerPotentials& pp);
/// Discretized -d^2/dr^2 + V+ with Dirichlet walls.
TridiagonalOperator<double> upper_operator(const PartnerPotentials& pp);

/// (d/dr + W) f. Centered differences inside, second-order one-sided at
/// the ends.
Vector apply_lowering(const Superpotential& w, const Vector& f, const RadialGrid& grid);
/// (-d/dr + W) f.
Vector apply_raising(const Superpotential& w, const Vector& f, const RadialGrid& grid);

/// Quadrature-normalized exp(-int_{r_min}^r W). The 1/r part of W is
/// integrated exactly, the rest by cumulative Simpson. Throws DomainError
/// when the result does not decay at r_max (broken SUSY or wrong sector).
Vector ground_state_from_w(const Superpotential& w, const RadialGrid& grid);

/// sup |-f'' + V- f| / sup |f| over interior points, second-order
/// differences.
double ground_residual(const Superpotential& w, const Vector& f, const RadialGrid& grid);

}  // namespace dirac2d

#endif  // DIRAC2D_SUPERPOT_HPP
