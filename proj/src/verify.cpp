#include "dirac2d/verify.hpp"

#include "dirac2d/analytic.hpp"
#include "dirac2d/numsolve.hpp"
#include "dirac2d/qes.hpp"
#include "dirac2d/spectrum.hpp"
#include "dirac2d/superpot.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace dirac2d {

std::string to_string(Check check) {
  switch (check) {
    case Check::Isospectral: return "isospectral";
    case Check::Intertwine: return "intertwine";
    case Check::Orthonormal: return "orthonormal";
    case Check::GroundResidual: return "ground_residual";
    case Check::AnalyticVsNumeric: return "analytic_vs_numeric";
  }
  return "unknown";
}

Check check_from_string(const std::string& name) {
  for (auto c : all_checks()) {
    if (to_string(c) == name) return c;
  }
  throw ConfigError("unknown check '" + name + "'");
}

std::vector<Check> all_checks() {
  return {Check::Isospectral, Check::Intertwine, Check::Orthonormal, Check::GroundResidual,
          Check::AnalyticVsNumeric};
}

bool VerifyReport::all_passed() const {
  return !infrastructure_failure &&
         std::all_of(entries.begin(), entries.end(), [](const VerifyEntry& e) { return e.passed; });
}

namespace {

bool has_laguerre_states(Family f) {
  return f == Family::Oscillator || f == Family::Coulomb || f == Family::Morse;
}

struct LowerStates {
  std::vector<double> epsilon_sq;
  std::vector<Vector> f;
};

LowerStates lower_states(const ModelSpec& model, const RadialGrid& grid, int count) {
  LowerStates states;
  if (has_laguerre_states(model.family())) {
    for (int n = 0; n < count; ++n) {
      states.epsilon_sq.push_back(analytic_epsilon_sq(n, model));
      states.f.push_back(analytic_lower_component(n, model, grid));
    }
    return states;
  }
  auto pairs = lower_eigenpairs(model, grid, count);
  states.epsilon_sq = std::move(pairs.values);
  states.f = std::move(pairs.vectors);
  return states;
}

std::string format_values(const std::vector<double>& values) {
  std::ostringstream os;
  os.precision(6);
  os << "[";
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << values[i];
  os << "]";
  return os.str();
}

VerifyEntry check_isospectral(const ModelSpec& model, const RadialGrid& grid, int levels) {
  const int k = std::max(levels, 2);
  const auto pp = partner_potentials(superpotential_from_model(model), grid);
  const auto report = isospectral_check(pp, k, 2e-3);
  return {"isospectral", report.passed(), report.max_deviation, report.tolerance,
          "V- " + format_values(report.lower) + " V+ " + format_values(report.upper)};
}

VerifyEntry check_intertwine(const ModelSpec& model, const RadialGrid& grid, int levels) {
  int count = std::max(levels, 2);
  const int bound = bound_state_count(model);
  if (bound >= 0) count = std::min(count, bound);
  if (count < 2) return {"intertwine", true, 0.0, 1e-2, "no excited bound level"};
  const auto w = superpotential_from_model(model);
  const auto states = lower_states(model, grid, count);
  double worst = 0.0;
  std::vector<double> ratios;
  for (int n = 1; n < count; ++n) {
    const double eps = std::sqrt(states.epsilon_sq[static_cast<std::size_t>(n)]);
    const double image = l2_norm(apply_lowering(w, states.f[static_cast<std::size_t>(n)], grid), grid);
    ratios.push_back(image / eps);
    worst = std::max(worst, std::abs(image - eps) / eps);
  }
  return {"intertwine", worst < 1e-2, worst, 1e-2, "||A f-(n)|| / eps(n) = " + format_values(ratios)};
}

VerifyEntry check_orthonormal(const ModelSpec& model, const RadialGrid& grid, int levels) {
  const auto states = lower_states(model, grid, levels);
  const auto count = states.f.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const double g = inner_product(states.f[i], states.f[j], grid);
      worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  }
  // Numeric eigenvectors are orthogonal in the discrete inner product, which
  // differs from Simpson by O(h^2) at a Robin wall.
  const double tol = model.family() == Family::Morse ? 1e-4 : has_laguerre_states(model.family()) ? 1e-6 : 1e-5;
  return {"orthonormal", worst < tol, worst, tol,
          "Gram matrix of " + std::to_string(count) + " lower components"};
}

VerifyEntry check_ground_residual(const ModelSpec& model, const RadialGrid& grid) {
  const auto w = superpotential_from_model(model);
  const Vector f0 = is_qes(model.family()) ? qes_closed_form_ground_state(model, grid)
                                           : ground_state_from_w(w, grid);
  const double residual = ground_residual(w, f0, grid);
  const double h = grid.spacing();
  const double tol = std::max(1e-4, 100.0 * h * h);
  return {"ground_residual", residual < tol, residual, tol,
          is_qes(model.family()) ? "closed-form QES ground state" : "exp(-int W)"};
}

VerifyEntry check_analytic_vs_numeric(const ModelSpec& model, const RadialGrid& grid, int levels) {
  if (is_qes(model.family())) {
    const auto spectrum = numeric_spectrum(model, grid, 1);
    const double level0 = std::abs(spectrum.levels[0].epsilon_sq);
    return {"analytic_vs_numeric", level0 < 5e-4, level0, 5e-4, "numeric eps^2 of the closed-form level 0"};
  }
  const auto numeric = numeric_spectrum(model, grid, levels);
  double worst = 0.0;
  std::vector<double> deltas;
  for (int n = 0; n < levels; ++n) {
    const double exact = analytic_epsilon_sq(n, model);
    const double delta = numeric.levels[static_cast<std::size_t>(n)].epsilon_sq - exact;
    deltas.push_back(delta);
    worst = std::max(worst, std::abs(delta) / std::max(1.0, exact));
  }
  return {"analytic_vs_numeric", worst < 1e-3, worst, 1e-3, "numeric - analytic = " + format_values(deltas)};
}

}  // namespace

VerifyReport run_verification(const ModelSpec& model, const RadialGrid& grid, int n_max,
                              const std::vector<Check>& checks) {
  model.validate();
  if (n_max < 0) throw ConfigError("n_max must be >= 0");
  int levels = n_max + 1;
  const int bound = bound_state_count(model);
  if (bound >= 0) levels = std::min(levels, bound);
  const bool wants_analytic = std::find(checks.begin(), checks.end(), Check::AnalyticVsNumeric) != checks.end();
  if (model.family() == Family::Custom && wants_analytic) {
    throw ConfigError("analytic_vs_numeric is not available for custom superpotentials");
  }

  VerifyReport report;
  for (const Check check : checks) {
    const std::function<VerifyEntry()> run = [&]() -> VerifyEntry {
      switch (check) {
        case Check::Isospectral: return check_isospectral(model, grid, levels);
        case Check::Intertwine: return check_intertwine(model, grid, levels);
        case Check::Orthonormal: return check_orthonormal(model, grid, levels);
        case Check::GroundResidual: return check_ground_residual(model, grid);
        case Check::AnalyticVsNumeric: return check_analytic_vs_numeric(model, grid, levels);
      }
      throw ConfigError("unknown check");
    };
    try {
      report.entries.push_back(run());
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      report.infrastructure_failure = true;
      report.entries.push_back({to_string(check), false, std::nan(""), 0.0, e.what()});
    }
  }
  return report;
}

}  // namespace dirac2d
