#include "dirac2d/analytic.hpp"

#include "dirac2d/numsolve.hpp"
#include "dirac2d/specfun.hpp"

#include <cmath>
#include <limits>

namespace dirac2d {

namespace {

void require_family(const ModelSpec& model, Family family, const char* who) {
  if (model.family() != family) {
    throw ConfigError(std::string(who) + ": wrong model family '" + to_string(model.family()) + "'");
  }
  model.validate();
}

void require_level(int n) {
  if (n < 0) throw ConfigError("level index n must be >= 0");
}

// exp(log_prefactor) * L_n^alpha(z) sampled pointwise, rescaled by the
// largest prefactor to stay inside double range.
Vector laguerre_shape(const Vector& log_prefactor, const Vector& z, int n, double alpha) {
  const double top = log_prefactor.maxCoeff();
  Vector f(z.size());
  for (Index i = 0; i < z.size(); ++i) {
    const double lp = log_prefactor[i] - top;
    f[i] = (lp < -745.0 || !std::isfinite(lp)) ? 0.0 : std::exp(lp) * laguerre(n, alpha, z[i]);
  }
  return f;
}

Vector normalized(Vector f, const RadialGrid& grid) {
  const double norm = l2_norm(f, grid);
  if (!(norm > 0) || !std::isfinite(norm)) throw NumericError("wavefunction has zero or non-finite norm");
  f /= norm;
  return f;
}

void require_half_line(const RadialGrid& grid, const char* who) {
  if (grid.r_min() < 0.0) throw DomainError(std::string(who) + ": radial grid must satisfy r_min >= 0");
}

Vector oscillator_lower(int n, const ModelSpec& model, const RadialGrid& grid) {
  require_half_line(grid, "oscillator");
  const auto& p = model.as<OscillatorParams>();
  const double k = model.units.mass * omega_total(p.omega, p.B, model.units) / model.units.hbar;
  const double l = model.ell;
  const Vector z = k * grid.points().cwiseAbs2();
  const Vector log_pre = 0.5 * (l + 1.0) * z.array().log() - 0.5 * z.array();
  return normalized(laguerre_shape(log_pre, z, n, l + 0.5), grid);
}

Vector coulomb_lower(int n, const ModelSpec& model, const RadialGrid& grid) {
  require_half_line(grid, "coulomb");
  const double kappa = model.as<CoulombParams>().kappa;
  const double l = model.ell;
  const Vector z = (2.0 * kappa / (n + l + 1.0)) * grid.points();
  const Vector log_pre = (l + 1.0) * z.array().log() - 0.5 * z.array();
  return normalized(laguerre_shape(log_pre, z, n, 2.0 * l + 1.0), grid);
}

Vector morse_lower(int n, const ModelSpec& model, const RadialGrid& grid) {
  const auto& p = model.as<MorseParams>();
  const double s = p.b / p.alpha;
  // ln z = ln(2a/alpha) - alpha r, kept in log form to avoid overflow on
  // the far left of the window.
  const Vector log_z = (std::log(2.0 * p.a / p.alpha) - p.alpha * grid.points().array()).matrix();
  const Vector z = log_z.array().exp().matrix();
  const Vector log_pre = (s - n) * log_z.array() - 0.5 * z.array();
  return normalized(laguerre_shape(log_pre, z, n, 2.0 * s - 2.0 * n), grid);
}

}  // namespace

double RadialWavefunction::spinor_norm() const {
  return quadrature(f_minus.cwiseAbs2() + f_plus.cwiseAbs2(), grid);
}

double oscillator_epsilon_sq(int n, const ModelSpec& model) {
  require_family(model, Family::Oscillator, "oscillator_epsilon_sq");
  require_level(n);
  const auto& p = model.as<OscillatorParams>();
  return 4.0 * n * model.units.mass / model.units.hbar * omega_total(p.omega, p.B, model.units);
}

double coulomb_epsilon_sq(int n, int ell, const ModelSpec& model) {
  require_family(model, Family::Coulomb, "coulomb_epsilon_sq");
  require_level(n);
  if (ell < 0) throw ConfigError("coulomb_epsilon_sq: ell must be >= 0");
  const double kappa = model.as<CoulombParams>().kappa;
  const double a = kappa / (ell + 1.0);
  const double b = kappa / (n + ell + 1.0);
  return a * a - b * b;
}

double morse_epsilon_sq(int n, const ModelSpec& model) {
  require_family(model, Family::Morse, "morse_epsilon_sq");
  require_level(n);
  const auto& p = model.as<MorseParams>();
  if (!(p.b - p.alpha * n > 0)) {
    throw NoBoundStateError("morse: level n = " + std::to_string(n) + " is unbound (needs b - alpha n > 0)");
  }
  return p.alpha * n * (2.0 * p.b - p.alpha * n);
}

int bound_state_count(const ModelSpec& model) {
  if (model.family() != Family::Morse) return -1;
  const auto& p = model.as<MorseParams>();
  const double ratio = p.b / p.alpha;
  int count = static_cast<int>(std::ceil(ratio));
  while (count > 0 && !(p.b - p.alpha * (count - 1) > 0)) --count;
  return count;
}

double analytic_epsilon_sq(int n, const ModelSpec& model) {
  switch (model.family()) {
    case Family::Oscillator: return oscillator_epsilon_sq(n, model);
    case Family::Coulomb: return coulomb_epsilon_sq(n, model.ell, model);
    case Family::Morse: return morse_epsilon_sq(n, model);
    case Family::AnharmonicQES:
    case Family::SexticQES:
    case Family::DeformedCoulombQES:
      model.validate();
      if (n != 0) throw ConfigError("QES families are known in closed form only at level 0");
      return 0.0;
    case Family::Custom: break;
  }
  throw ConfigError("custom superpotentials have no analytic spectrum");
}

SpectrumResult analytic_spectrum(const ModelSpec& model, int n_max) {
  require_level(n_max);
  SpectrumResult result;
  for (int n = 0; n <= n_max; ++n) {
    result.levels.push_back(make_level(n, analytic_epsilon_sq(n, model), Source::Analytic, model.units));
  }
  return result;
}

Vector analytic_lower_component(int n, const ModelSpec& model, const RadialGrid& grid) {
  require_level(n);
  switch (model.family()) {
    case Family::Oscillator: model.validate(); return oscillator_lower(n, model, grid);
    case Family::Coulomb: model.validate(); return coulomb_lower(n, model, grid);
    case Family::Morse:
      morse_epsilon_sq(n, model);  // bound-state check
      return morse_lower(n, model, grid);
    default: break;
  }
  throw ConfigError("analytic_lower_component: no Laguerre form for family '" +
                    to_string(model.family()) + "'");
}

RadialWavefunction spinor_from_lower(const Superpotential& w, Vector f_minus, int n, double epsilon_sq,
                                     const RadialGrid& grid) {
  Vector f_plus = Vector::Zero(grid.size());
  if (epsilon_sq > 0) f_plus = apply_lowering(w, f_minus, grid) / std::sqrt(epsilon_sq);
  RadialWavefunction psi{grid, std::move(f_minus), std::move(f_plus), n, epsilon_sq};
  const double scale = 1.0 / std::sqrt(psi.spinor_norm());
  psi.f_minus *= scale;
  psi.f_plus *= scale;
  return psi;
}

RadialWavefunction oscillator_wavefunctions(int n, const ModelSpec& model, const RadialGrid& grid) {
  const double eps2 = oscillator_epsilon_sq(n, model);
  return spinor_from_lower(superpotential_from_model(model), oscillator_lower(n, model, grid), n, eps2, grid);
}

RadialWavefunction coulomb_wavefunctions(int n, const ModelSpec& model, const RadialGrid& grid) {
  const double eps2 = coulomb_epsilon_sq(n, model.ell, model);
  return spinor_from_lower(superpotential_from_model(model), coulomb_lower(n, model, grid), n, eps2, grid);
}

RadialWavefunction morse_wavefunctions(int n, const ModelSpec& model, const RadialGrid& grid) {
  const double eps2 = morse_epsilon_sq(n, model);
  return spinor_from_lower(superpotential_from_model(model), morse_lower(n, model, grid), n, eps2, grid);
}

RadialWavefunction analytic_wavefunction(int n, const ModelSpec& model, const RadialGrid& grid) {
  switch (model.family()) {
    case Family::Oscillator: return oscillator_wavefunctions(n, model, grid);
    case Family::Coulomb: return coulomb_wavefunctions(n, model, grid);
    case Family::Morse: return morse_wavefunctions(n, model, grid);
    default: break;
  }
  throw ConfigError("analytic_wavefunction: family '" + to_string(model.family()) +
                    "' has no closed-form excited states");
}

}  // namespace dirac2d
