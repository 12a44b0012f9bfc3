#include "dirac2d/qes.hpp"

#include "dirac2d/numsolve.hpp"
#include "dirac2d/spectrum.hpp"

#include <cmath>

namespace dirac2d {

namespace {

void require_qes(const ModelSpec& model, const char* who) {
  if (!is_qes(model.family())) {
    throw ConfigError(std::string(who) + ": '" + to_string(model.family()) + "' is not a QES family");
  }
  model.validate();
}

double log_ground_state(const ModelSpec& model, double r) {
  const double l = model.ell;
  switch (model.family()) {
    case Family::AnharmonicQES: {
      const auto& p = model.as<AnharmonicParams>();
      return -p.b * r * r * r / 3.0 - 0.5 * p.omega_t * r * r - p.a * r;
    }
    case Family::SexticQES: {
      const auto& p = model.as<SexticParams>();
      const double power = l == 0.0 ? 0.0 : l * std::log(r);
      return power - 0.5 * p.omega_t * r * r - 0.25 * p.b * r * r * r * r;
    }
    case Family::DeformedCoulombQES: {
      const auto& p = model.as<DeformedCoulombParams>();
      return (l + 1.0) * std::log(r) - 0.5 * p.omega_t * r * r - p.e2 * r / (2.0 * (l + 1.0));
    }
    default: break;
  }
  throw ConfigError("not a QES family");
}

}  // namespace

PartnerPotentials qes_partner_potentials(const ModelSpec& model, const RadialGrid& grid) {
  require_qes(model, "qes_partner_potentials");
  return partner_potentials(superpotential_from_model(model), grid);
}

Vector qes_closed_form_ground_state(const ModelSpec& model, const RadialGrid& grid) {
  require_qes(model, "qes_closed_form_ground_state");
  const Vector log_f = grid.points().unaryExpr([&](double r) { return log_ground_state(model, r); });
  if (std::isnan(log_f.maxCoeff())) throw DomainError("qes ground state: invalid grid");
  Vector f = (log_f.array() - log_f.maxCoeff()).exp().matrix();
  if (f[f.size() - 1] > 1e-6) {
    throw DomainError("qes ground state: not decayed at r_max; extend the grid");
  }
  f /= l2_norm(f, grid);
  return f;
}

QesGroundState qes_ground_state(const ModelSpec& model, const RadialGrid& grid) {
  const auto w = superpotential_from_model(model);
  QesGroundState gs{model, grid, qes_closed_form_ground_state(model, grid), 0.0, 0.0};
  gs.residual_sup = ground_residual(w, gs.f0, grid);
  return gs;
}

SpectrumResult qes_numeric_spectrum(const ModelSpec& model, const RadialGrid& grid, int k) {
  require_qes(model, "qes_numeric_spectrum");
  return numeric_spectrum(model, grid, k);
}

}  // namespace dirac2d
