#ifndef DIRAC2D_ANALYTIC_HPP
#define DIRAC2D_ANALYTIC_HPP

// Closed-form spectra and Laguerre wavefunctions of the exactly solvable
// families: Dirac oscillator, Coulomb and Morse.

#include "dirac2d/core.hpp"
#include "dirac2d/superpot.hpp"

namespace dirac2d {

/// Radial spinor components on a grid, normalized so that
/// int (f+^2 + f-^2) dr = 1.
struct RadialWavefunction {
  RadialGrid grid;
  Vector f_minus;
  Vector f_plus;
  int n = 0;
  double epsilon_sq = 0.0;

  double spinor_norm() const;
};

/// 4 n (m / hbar) omega_T.
double oscillator_epsilon_sq(int n, const ModelSpec& model);
/// kappa^2 (1/(l+1)^2 - 1/(n+l+1)^2).
double coulomb_epsilon_sq(int n, int ell, const ModelSpec& model);
/// alpha n (2b - alpha n); NoBoundStateError unless b - alpha n > 0.
double morse_epsilon_sq(int n, const ModelSpec& model);

/// Number of bound levels, or -1 when the family has infinitely many.
int bound_state_count(const ModelSpec& model);

/// Dispatch over families. QES families are known in closed form only at
/// n = 0 (eps^2 = 0); asking for n > 0 is a ConfigError. Custom models have
/// no closed form.
double analytic_epsilon_sq(int n, const ModelSpec& model);

/// Levels 0..n_max with source = Analytic.
SpectrumResult analytic_spectrum(const ModelSpec& model, int n_max);

/// Quadrature-normalized lower component f- of level n from its Laguerre form
/// (positive normalization constant).
Vector analytic_lower_component(int n, const ModelSpec& model, const RadialGrid& grid);

/// Spinor from a lower component: f+ = (d/dr + W) f- / eps for eps^2 > 0,
/// f+ = 0 otherwise, then the pair is renormalized.
RadialWavefunction spinor_from_lower(const Superpotential& w, Vector f_minus, int n, double epsilon_sq,
                                     const RadialGrid& grid);

RadialWavefunction oscillator_wavefunctions(int n, const ModelSpec& model, const RadialGrid& grid);
RadialWavefunction coulomb_wavefunctions(int n, const ModelSpec& model, const RadialGrid& grid);
RadialWavefunction morse_wavefunctions(int n, const ModelSpec& model, const RadialGrid& grid);

/// Dispatch over the exactly solvable families.
RadialWavefunction analytic_wavefunction(int n, const ModelSpec& model, const RadialGrid& grid);

}  // namespace dirac2d

#endif  // DIRAC2D_ANALYTIC_HPP
