#include "dirac2d/spectrum.hpp"

#include "dirac2d/analytic.hpp"
#include "dirac2d/superpot.hpp"

#include <algorithm>
#include <cmath>

namespace dirac2d {

Eigenpairs<double> lower_eigenpairs(const ModelSpec& model, const RadialGrid& grid, int k) {
  if (k < 1) throw ConfigError("need at least one level");
  const auto pp = partner_potentials(superpotential_from_model(model), grid);
  return lowest_eigenpairs(lower_operator(pp), static_cast<Index>(k), kEigenTolerance);
}

SpectrumResult numeric_spectrum(const ModelSpec& model, const RadialGrid& grid, int k) {
  if (k < 1) throw ConfigError("need at least one level");
  const auto pp = partner_potentials(superpotential_from_model(model), grid);
  const auto values = lowest_eigenvalues(lower_operator(pp), static_cast<Index>(k), kEigenTolerance);
  SpectrumResult result;
  for (int n = 0; n < k; ++n) {
    result.levels.push_back(make_level(n, values[static_cast<std::size_t>(n)], Source::Numeric, model.units));
  }
  return result;
}

namespace {

// Radius beyond the peak of exp(-int W) where it has dropped by 1e-10.
double decay_radius(const Superpotential& w, double r0) {
  constexpr double kDrop = 23.03;  // ln 1e10
  constexpr double kStep = 1e-3;
  const double pole = w.pole();
  const auto smooth = [&](double r) { return pole == 0.0 ? w(r) : w(r) - pole / r; };
  double integral = 0.0, peak = 0.0, r = r0;
  for (int i = 0; i < 10'000'000; ++i) {
    const double next = r + kStep;
    integral += 0.5 * kStep * (smooth(r) + smooth(next));
    const double log_f = -integral - (pole == 0.0 ? 0.0 : pole * std::log(next / r0));
    peak = std::max(peak, log_f);
    r = next;
    if (log_f < peak - kDrop) return r;
  }
  throw DomainError("default_grid: exp(-int W) does not decay");
}

}  // namespace

RadialGrid default_grid(const ModelSpec& model) {
  model.validate();
  switch (model.family()) {
    case Family::Oscillator: {
      const auto& p = model.as<OscillatorParams>();
      const double k = model.units.mass * omega_total(p.omega, p.B, model.units) / model.units.hbar;
      return RadialGrid(1e-3, 12.0 / std::sqrt(k), 2401);
    }
    case Family::Coulomb:
      return RadialGrid(1e-3, 250.0 / model.as<CoulombParams>().kappa, 12001);
    case Family::Morse: {
      const auto& p = model.as<MorseParams>();
      const int top = bound_state_count(model) - 1;
      const double r_max = std::max(40.0 / p.alpha, 30.0 / (p.b - p.alpha * top));
      return RadialGrid::with_spacing(-10.0 / p.alpha, r_max, 0.0065 / p.alpha);
    }
    case Family::AnharmonicQES:
    case Family::SexticQES: {
      const auto w = superpotential_from_model(model);
      const double r0 = w.singular_at_origin() ? 1e-3 : 0.0;
      const double r_max = 2.0 * decay_radius(w, r0);
      return RadialGrid(r0, r_max, 4001);
    }
    case Family::DeformedCoulombQES: {
      const auto& p = model.as<DeformedCoulombParams>();
      const double scale = std::max(p.omega_t, p.e2 / (2.0 * (model.ell + 1.0)));
      return RadialGrid(1e-3, 20.0 / scale, 4001);
    }
    case Family::Custom: {
      const auto& r = model.as<CustomParams>().r;
      const Index n = r.size();
      const RadialGrid grid(r[0], r[n - 1], n);
      for (Index i = 0; i < n; ++i) {
        if (std::abs(r[i] - grid.r(i)) > 1e-9 * (1.0 + std::abs(r[i]))) {
          throw ConfigError("custom table is not uniformly spaced; pass --grid explicitly");
        }
      }
      return grid;
    }
  }
  throw ConfigError("default_grid: unknown family");
}

}  // namespace dirac2d
