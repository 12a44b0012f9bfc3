#include "dirac2d/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dirac2d {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

}  // namespace

void Units::validate() const {
  require(hbar > 0 && mass > 0 && c > 0 && e_charge > 0 && eps0 > 0,
          "units: all constants must be strictly positive");
}

RadialGrid::RadialGrid(double r_min, double r_max, Index n_points)
    : r_min_(r_min), r_max_(r_max), n_points_(n_points), h_(0.0) {
  require(std::isfinite(r_min) && std::isfinite(r_max), "grid: bounds must be finite");
  require(r_min < r_max, "grid: r_min must be below r_max");
  require(n_points >= 3, "grid: need at least 3 points");
  h_ = (r_max - r_min) / static_cast<double>(n_points - 1);
}

RadialGrid RadialGrid::with_spacing(double r_min, double r_max, double h) {
  require(h > 0, "grid: spacing must be positive");
  const auto intervals = static_cast<Index>(std::llround((r_max - r_min) / h));
  return RadialGrid(r_min, r_max, std::max<Index>(intervals, 2) + 1);
}

std::string to_string(Family family) {
  switch (family) {
    case Family::Oscillator: return "oscillator";
    case Family::Coulomb: return "coulomb";
    case Family::Morse: return "morse";
    case Family::AnharmonicQES: return "anharmonic";
    case Family::SexticQES: return "sextic";
    case Family::DeformedCoulombQES: return "deformed-coulomb";
    case Family::Custom: return "custom";
  }
  return "unknown";
}

Family family_from_string(const std::string& name) {
  for (auto f : {Family::Oscillator, Family::Coulomb, Family::Morse, Family::AnharmonicQES,
                 Family::SexticQES, Family::DeformedCoulombQES, Family::Custom}) {
    if (to_string(f) == name) return f;
  }
  throw ConfigError("unknown model family '" + name + "'");
}

bool is_qes(Family family) {
  return family == Family::AnharmonicQES || family == Family::SexticQES ||
         family == Family::DeformedCoulombQES;
}

std::string to_string(Source source) {
  return source == Source::Analytic ? "analytic" : "numeric";
}

void ModelSpec::validate() const {
  units.validate();
  struct Visitor {
    const ModelSpec& m;
    void operator()(const OscillatorParams& p) const {
      require(p.omega >= 0 && p.B >= 0, "oscillator: omega and B must be >= 0");
      require(omega_total(p.omega, p.B, m.units) > 0, "oscillator: omega_T must be > 0");
      require(m.ell >= 0, "oscillator: ell must be >= 0");
    }
    void operator()(const CoulombParams& p) const {
      require(p.kappa > 0, "coulomb: kappa must be > 0");
      require(m.ell >= 0, "coulomb: ell must be >= 0");
    }
    void operator()(const MorseParams& p) const {
      require(p.a > 0 && p.alpha > 0 && p.b > 0, "morse: a, alpha, b must be > 0");
    }
    void operator()(const AnharmonicParams& p) const {
      require(std::isfinite(p.a), "anharmonic: a must be finite");
      require(p.omega_t > 0 && p.b >= 0, "anharmonic: omega_T > 0 and b >= 0 required");
    }
    void operator()(const SexticParams& p) const {
      require(p.omega_t > 0 && p.b >= 0, "sextic: omega_T > 0 and b >= 0 required");
      require(m.ell >= 0, "sextic: ell must be >= 0");
    }
    void operator()(const DeformedCoulombParams& p) const {
      require(p.e2 > 0 && p.omega_t >= 0, "deformed-coulomb: e2 > 0 and omega_T >= 0 required");
      require(m.ell >= 0, "deformed-coulomb: ell must be >= 0");
    }
    void operator()(const CustomParams& p) const {
      require(p.r.size() >= 2, "custom: need tabulated W data");
      require(p.w.size() == p.r.size() && p.w_prime.size() == p.r.size(),
              "custom: r, w, w_prime must have equal length");
      for (Index i = 1; i < p.r.size(); ++i) {
        require(p.r[i] > p.r[i - 1], "custom: abscissae must be increasing");
      }
      require(p.w.allFinite() && p.w_prime.allFinite(), "custom: samples must be finite");
    }
  };
  std::visit(Visitor{*this}, params);
}

double omega_total(double omega, double B, const Units& units) {
  return omega + units.e_charge * B / (2.0 * units.mass);
}

EnergyPair epsilon_to_energy(double epsilon_sq, const Units& units) {
  if (!(epsilon_sq >= 0)) {
    throw DomainError("epsilon_to_energy: negative eps^2 is not a physical level");
  }
  const double mc2 = units.rest_energy();
  const double hc = units.hbar * units.c;
  const double e = std::sqrt(mc2 * mc2 + hc * hc * epsilon_sq);
  return {e, -e};
}

double nonrelativistic_limit(double epsilon_sq, const Units& units) {
  return units.hbar * units.hbar * epsilon_sq / (2.0 * units.mass);
}

double coulomb_kappa(const Units& units) {
  return units.mass * units.e_charge * units.e_charge /
         (4.0 * std::numbers::pi * units.eps0 * units.hbar * units.hbar);
}

Level make_level(int n, double epsilon_sq, Source source, const Units& units) {
  Level level{n, epsilon_sq, 0.0, 0.0, source};
  if (source == Source::Analytic || epsilon_sq >= 0) {
    const auto e = epsilon_to_energy(epsilon_sq, units);
    level.energy_plus = e.plus;
    level.energy_minus = e.minus;
    return level;
  }
  const double mc2 = units.rest_energy();
  const double hc = units.hbar * units.c;
  const double radicand = mc2 * mc2 + hc * hc * epsilon_sq;
  if (!(radicand >= 0)) throw DomainError("numeric level below -m^2c^4: non-physical");
  level.energy_plus = std::sqrt(radicand);
  level.energy_minus = -level.energy_plus;
  return level;
}

}  // namespace dirac2d
