#ifndef DIRAC2D_QES_HPP
#define DIRAC2D_QES_HPP

// Quasi-exactly solvable families: anharmonic, sextic and deformed Coulomb.
// Only the ground level is known in closed form; excited levels come from
// the numeric solver.

#include "dirac2d/core.hpp"
#include "dirac2d/superpot.hpp"

namespace dirac2d {

struct QesGroundState {
  ModelSpec model;
  RadialGrid grid;
  Vector f0;
  double epsilon_sq = 0.0;
  double residual_sup = 0.0;
};

PartnerPotentials qes_partner_potentials(const ModelSpec& model, const RadialGrid& grid);

/// The closed-form ground state, quadrature-normalized:
///   anharmonic       exp(-b r^3/3 - omega_T r^2/2 - a r)
///   sextic           r^l exp(-omega_T r^2/2 - b r^4/4)
///   deformed Coulomb r^(l+1) exp(-omega_T r^2/2 - e2 r/(2(l+1)))
Vector qes_closed_form_ground_state(const ModelSpec& model, const RadialGrid& grid);

/// Closed-form ground state plus its finite-difference residual against
/// V- = W^2 - W'.
QesGroundState qes_ground_state(const ModelSpec& model, const RadialGrid& grid);

/// The k lowest levels of V-, all labeled Numeric.
SpectrumResult qes_numeric_spectrum(const ModelSpec& model, const RadialGrid& grid, int k);

}  // namespace dirac2d

#endif  // DIRAC2D_QES_HPP
