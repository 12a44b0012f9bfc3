#include "dirac2d/superpot.hpp"

#include <algorithm>
#include <cmath>

namespace dirac2d {

namespace {

// c / r with the convention that a vanishing coefficient contributes exactly
// zero, so regular families can be evaluated at r = 0.
double over_r(double c, double r) { return c == 0.0 ? 0.0 : c / r; }
double over_r2(double c, double r) { return c == 0.0 ? 0.0 : c / (r * r); }

Superpotential make_oscillator(const ModelSpec& m) {
  const auto& p = m.as<OscillatorParams>();
  const Units u = m.units;
  const double k = u.mass * omega_total(p.omega, p.B, u) / u.hbar;
  const double l1 = m.ell + 1.0;
  const double l = m.ell;
  return Superpotential(
      [=](double r) { return k * r - l1 / r; }, [=](double r) { return k + l1 / (r * r); }, l,
      [=](double r) { return u.e_charge * (0.5 * p.B * r) / u.hbar; },
      [=](double r) { return u.mass * p.omega * r / u.hbar - (2.0 * l + 1.0) / r; }, -l1);
}

Superpotential make_coulomb(const ModelSpec& m) {
  const double kappa = m.as<CoulombParams>().kappa;
  const double l1 = m.ell + 1.0;
  const double l = m.ell;
  return Superpotential(
      [=](double r) { return kappa / l1 - l1 / r; }, [=](double r) { return l1 / (r * r); }, l,
      [](double) { return 0.0; }, [=](double r) { return kappa / l1 - (2.0 * l + 1.0) / r; }, -l1);
}

Superpotential make_morse(const ModelSpec& m) {
  const auto p = m.as<MorseParams>();
  const double l = m.ell;
  return Superpotential(
      [=](double r) { return p.b - p.a * std::exp(-p.alpha * r); },
      [=](double r) { return p.a * p.alpha * std::exp(-p.alpha * r); }, l, [](double) { return 0.0; },
      [=](double r) { return -over_r(l, r) - p.a * std::exp(-p.alpha * r) + p.b; }, 0.0);
}

Superpotential make_anharmonic(const ModelSpec& m) {
  const auto p = m.as<AnharmonicParams>();
  const double l = m.ell;
  return Superpotential(
      [=](double r) { return p.a + p.omega_t * r + p.b * r * r; },
      [=](double r) { return p.omega_t + 2.0 * p.b * r; }, l, [](double) { return 0.0; },
      [=](double r) { return -over_r(l, r) + p.omega_t * r + p.b * r * r + p.a; }, 0.0);
}

Superpotential make_sextic(const ModelSpec& m) {
  const auto p = m.as<SexticParams>();
  const double l = m.ell;
  return Superpotential(
      [=](double r) { return -over_r(l, r) + p.omega_t * r + p.b * r * r * r; },
      [=](double r) { return over_r2(l, r) + p.omega_t + 3.0 * p.b * r * r; }, l,
      [](double) { return 0.0; },
      [=](double r) { return -over_r(2.0 * l, r) + p.omega_t * r + p.b * r * r * r; }, -l);
}

Superpotential make_deformed_coulomb(const ModelSpec& m) {
  const auto p = m.as<DeformedCoulombParams>();
  const double l1 = m.ell + 1.0;
  const double l = m.ell;
  const double c = p.e2 / (2.0 * l1);
  return Superpotential(
      [=](double r) { return c - l1 / r + p.omega_t * r; },
      [=](double r) { return l1 / (r * r) + p.omega_t; }, l, [](double) { return 0.0; },
      [=](double r) { return c - (2.0 * l + 1.0) / r + p.omega_t * r; }, -l1);
}

// Piecewise-linear interpolation of a table; outside the table is an error.
struct TableInterpolant {
  Vector x;
  Vector y;
  double operator()(double r) const {
    const Index n = x.size();
    const double span = x[n - 1] - x[0];
    const double slack = 1e-12 * span;
    if (r < x[0] - slack || r > x[n - 1] + slack) {
      throw DomainError("custom W: r = " + std::to_string(r) + " outside the tabulated range");
    }
    const auto* begin = x.data();
    const auto* it = std::upper_bound(begin, begin + n, r);
    Index j = std::clamp<Index>(static_cast<Index>(it - begin) - 1, 0, n - 2);
    const double t = (r - x[j]) / (x[j + 1] - x[j]);
    return (1.0 - t) * y[j] + t * y[j + 1];
  }
};

Superpotential make_custom(const ModelSpec& m) {
  const auto& p = m.as<CustomParams>();
  const TableInterpolant w{p.r, p.w};
  const TableInterpolant wp{p.r, p.w_prime};
  const double l = m.ell;
  return Superpotential(
      w, wp, l, [](double) { return 0.0; }, [=](double r) { return w(r) - over_r(l, r); }, 0.0);
}

}  // namespace

Superpotential::Superpotential(Function w, Function w_prime, double ell, Function a_field,
                               Function v_field, double pole)
    : w_(std::move(w)),
      w_prime_(std::move(w_prime)),
      ell_(ell),
      a_field_(std::move(a_field)),
      v_field_(std::move(v_field)),
      pole_(pole) {}

double Superpotential::assembled(double r) const {
  return over_r(ell_, r) + a_field_(r) + v_field_(r);
}

Vector Superpotential::sample(const RadialGrid& grid) const {
  return grid.points().unaryExpr([this](double r) { return w_(r); });
}

Vector Superpotential::sample_derivative(const RadialGrid& grid) const {
  return grid.points().unaryExpr([this](double r) { return w_prime_(r); });
}

Superpotential superpotential_from_model(const ModelSpec& model) {
  model.validate();
  switch (model.family()) {
    case Family::Oscillator: return make_oscillator(model);
    case Family::Coulomb: return make_coulomb(model);
    case Family::Morse: return make_morse(model);
    case Family::AnharmonicQES: return make_anharmonic(model);
    case Family::SexticQES: return make_sextic(model);
    case Family::DeformedCoulombQES: return make_deformed_coulomb(model);
    case Family::Custom: return make_custom(model);
  }
  throw ConfigError("superpotential_from_model: unknown family");
}

PartnerPotentials partner_potentials(const Superpotential& w, const RadialGrid& grid) {
  if (w.singular_at_origin() && grid.r_min() <= 0.0) {
    throw DomainError("partner_potentials: grid reaches the r = 0 singularity of W");
  }
  const Vector ws = w.sample(grid);
  const Vector wp = w.sample_derivative(grid);
  PartnerPotentials pp{grid, ws.cwiseAbs2() - wp, ws.cwiseAbs2() + wp, ws[0]};
  if (!pp.v_minus.allFinite() || !pp.v_plus.allFinite()) {
    throw DomainError("partner_potentials: non-finite potential on the grid");
  }
  return pp;
}

TridiagonalOperator<double> lower_operator(const PartnerPotentials& pp) {
  return discretize(pp.v_minus, pp.grid, LeftBoundary::robin(pp.w_left));
}

TridiagonalOperator<double> upper_operator(const PartnerPotentials& pp) {
  return discretize(pp.v_plus, pp.grid, LeftBoundary::dirichlet());
}

namespace {

Vector derivative(const Vector& f, const RadialGrid& grid) {
  const Index n = f.size();
  if (n != grid.size()) throw ConfigError("sample count does not match grid");
  const double h = grid.spacing();
  Vector d(n);
  d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
  d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
  d.segment(1, n - 2) = (f.tail(n - 2) - f.head(n - 2)) / (2.0 * h);
  return d;
}

}  // namespace

Vector apply_lowering(const Superpotential& w, const Vector& f, const RadialGrid& grid) {
  return derivative(f, grid) + w.sample(grid).cwiseProduct(f);
}

Vector apply_raising(const Superpotential& w, const Vector& f, const RadialGrid& grid) {
  return -derivative(f, grid) + w.sample(grid).cwiseProduct(f);
}

Vector ground_state_from_w(const Superpotential& w, const RadialGrid& grid) {
  const double r0 = grid.r_min();
  if (w.singular_at_origin() && r0 <= 0.0) {
    throw DomainError("ground_state_from_w: grid reaches the r = 0 singularity of W");
  }
  const Index n = grid.size();
  const double h = grid.spacing();
  const double pole = w.pole();
  const Vector r = grid.points();
  const Vector g = r.unaryExpr([&](double x) { return w(x) - over_r(pole, x); });

  Vector integral(n);
  integral[0] = 0.0;
  for (Index i = 1; i < n; ++i) {
    if (i % 2 == 0) {
      integral[i] = integral[i - 2] + h / 3.0 * (g[i - 2] + 4.0 * g[i - 1] + g[i]);
    } else if (i + 1 < n) {
      integral[i] = integral[i - 1] + h / 12.0 * (5.0 * g[i - 1] + 8.0 * g[i] - g[i + 1]);
    } else {
      integral[i] = integral[i - 1] + h / 12.0 * (-g[i - 2] + 8.0 * g[i - 1] + 5.0 * g[i]);
    }
  }

  Vector log_f = -integral;
  if (pole != 0.0) log_f -= pole * (r / r0).array().log().matrix();
  if (!log_f.allFinite()) throw DomainError("ground_state_from_w: non-finite exponent");
  Vector f = (log_f.array() - log_f.maxCoeff()).exp().matrix();
  if (f[n - 1] > 1e-6) {
    throw DomainError("ground_state_from_w: exp(-int W) does not decay at r_max (broken SUSY?)");
  }
  f /= l2_norm(f, grid);
  return f;
}

double ground_residual(const Superpotential& w, const Vector& f, const RadialGrid& grid) {
  const Index n = grid.size();
  if (f.size() != n) throw ConfigError("ground_residual: sample count does not match grid");
  const double inv_h2 = 1.0 / (grid.spacing() * grid.spacing());
  double worst = 0.0;
  for (Index i = 1; i + 1 < n; ++i) {
    const double r = grid.r(i);
    const double wr = w(r);
    const double v_minus = wr * wr - w.derivative(r);
    const double res = -(f[i - 1] - 2.0 * f[i] + f[i + 1]) * inv_h2 + v_minus * f[i];
    worst = std::max(worst, std::abs(res));
  }
  return worst / f.cwiseAbs().maxCoeff();
}

}  // namespace dirac2d
