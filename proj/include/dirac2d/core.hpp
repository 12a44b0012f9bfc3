#ifndef DIRAC2D_CORE_HPP
#define DIRAC2D_CORE_HPP

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace dirac2d {

// Error taxonomy shared by every module. The CLI maps ConfigError to exit
// code 2 and everything else to exit code 3.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NoBoundStateError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Physical constants used by the radial equations. Defaults are natural
/// units (everything 1).
struct Units {
  double hbar = 1.0;
  double mass = 1.0;
  double c = 1.0;
  double e_charge = 1.0;
  double eps0 = 1.0;

  void validate() const;
  double rest_energy() const { return mass * c * c; }
};

/// Uniform mesh on [r_min, r_max].
class RadialGrid {
 public:
  RadialGrid(double r_min, double r_max, Index n_points);

  double r_min() const { return r_min_; }
  double r_max() const { return r_max_; }
  Index size() const { return n_points_; }
  double spacing() const { return h_; }
  double r(Index i) const { return r_min_ + static_cast<double>(i) * h_; }
  Vector points() const { return Vector::LinSpaced(n_points_, r_min_, r_max_); }

  /// Same interval, n_points chosen so the spacing is (approximately) h.
  static RadialGrid with_spacing(double r_min, double r_max, double h);

 private:
  double r_min_;
  double r_max_;
  Index n_points_;
  double h_;
};

enum class Family {
  Oscillator,
  Coulomb,
  Morse,
  AnharmonicQES,
  SexticQES,
  DeformedCoulombQES,
  Custom
};

std::string to_string(Family family);
Family family_from_string(const std::string& name);
bool is_qes(Family family);

struct OscillatorParams {
  double omega = 1.0;
  double B = 0.0;
};

/// kappa = m e^2 / (4 pi eps0 hbar^2).
struct CoulombParams {
  double kappa = 1.0;
};

struct MorseParams {
  double a = 3.0;
  double alpha = 1.0;
  double b = 3.0;
};

struct AnharmonicParams {
  double a = 0.0;
  double omega_t = 1.0;
  double b = 1.0;
};

struct SexticParams {
  double omega_t = 1.0;
  double b = 1.0;
};

struct DeformedCoulombParams {
  double e2 = 1.0;
  double omega_t = 1.0;
};

/// Tabulated W and W' samples at increasing abscissae r.
struct CustomParams {
  Vector r;
  Vector w;
  Vector w_prime;
};

using ModelParams = std::variant<OscillatorParams, CoulombParams, MorseParams, AnharmonicParams,
                                 SexticParams, DeformedCoulombParams, CustomParams>;

struct ModelSpec {
  ModelParams params = OscillatorParams{};
  int ell = 0;
  Units units{};

  Family family() const { return static_cast<Family>(params.index()); }

  /// Throws ConfigError when parameters violate the family's invariants.
  void validate() const;

  template <typename P>
  const P& as() const {
    return std::get<P>(params);
  }
};

enum class Source { Analytic, Numeric };

std::string to_string(Source source);

struct Level {
  int n = 0;
  double epsilon_sq = 0.0;
  double energy_plus = 0.0;
  double energy_minus = 0.0;
  Source source = Source::Analytic;
};

struct SpectrumResult {
  std::vector<Level> levels;
};

struct EnergyPair {
  double plus;
  double minus;
};

/// omega + e B / (2 m): mechanical frequency plus the Larmor term.
double omega_total(double omega, double B, const Units& units = {});

/// (+E, -E) with E = sqrt(m^2 c^4 + hbar^2 c^2 eps^2). Negative eps^2 is a
/// DomainError.
EnergyPair epsilon_to_energy(double epsilon_sq, const Units& units = {});

/// hbar^2 eps^2 / (2 m), the leading term of E - m c^2.
double nonrelativistic_limit(double epsilon_sq, const Units& units = {});

/// m e^2 / (4 pi eps0 hbar^2) for the given units.
double coulomb_kappa(const Units& units);

/// Builds a level row. Numeric rows may carry a slightly negative eps^2 from
/// discretization; they are accepted while m^2c^4 + hbar^2c^2 eps^2 >= 0.
Level make_level(int n, double epsilon_sq, Source source, const Units& units);

}  // namespace dirac2d

#endif  // DIRAC2D_CORE_HPP
