#ifndef DIRAC2D_SPECTRUM_HPP
#define DIRAC2D_SPECTRUM_HPP

#include "dirac2d/core.hpp"
#include "dirac2d/numsolve.hpp"

namespace dirac2d {

/// Bisection width used for every model eigenvalue.
inline constexpr double kEigenTolerance = 1e-10;

/// k lowest eps^2 and eigenfunctions of V- for the model on the grid.
Eigenpairs<double> lower_eigenpairs(const ModelSpec& model, const RadialGrid& grid, int k);

/// Levels 0..k-1 of V- from the finite-difference solver, source = Numeric.
SpectrumResult numeric_spectrum(const ModelSpec& model, const RadialGrid& grid, int k);

/// Default grid per family:
///   oscillator        [1e-3, 12 / sqrt(m omega_T / hbar)], 2401 points
///   coulomb           [1e-3, 250 / kappa], 12001 points
///   morse             [-10/alpha, max(40/alpha, 30/(b - alpha n_top))], h = 0.0065/alpha
///   anharmonic/sextic r_max = 2 r_decay where exp(-int W) has dropped by 1e-10
///                     from its peak; r_min = 0 unless W has a 1/r pole (1e-3)
///   deformed-coulomb  [1e-3, 20 / max(omega_T, e2/(2(l+1)))], 4001 points
///   custom            the table's own abscissae (must be uniform)
RadialGrid default_grid(const ModelSpec& model);

}  // namespace dirac2d

#endif  // DIRAC2D_SPECTRUM_HPP
