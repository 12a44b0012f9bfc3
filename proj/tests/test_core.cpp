#include "dirac2d/analytic.hpp"
#include "dirac2d/core.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace dirac2d;

TEST_CASE("omega_total adds the Larmor term") {
  CHECK(omega_total(1.0, 0.0) == doctest::Approx(1.0));
  CHECK(omega_total(1.0, 2.0) == doctest::Approx(2.0));
  CHECK(omega_total(0.0, 4.0) == doctest::Approx(2.0));
  const Units u{1.0, 2.0, 1.0, 3.0, 1.0};
  CHECK(omega_total(1.0, 4.0, u) == doctest::Approx(1.0 + 3.0 * 4.0 / 4.0));
}

TEST_CASE("epsilon_to_energy") {
  auto e = epsilon_to_energy(0.0);
  CHECK(e.plus == 1.0);
  CHECK(e.minus == -1.0);
  e = epsilon_to_energy(3.0);
  CHECK(e.plus == doctest::Approx(2.0));
  CHECK(e.minus == doctest::Approx(-2.0));
  e = epsilon_to_energy(8.0);
  CHECK(e.plus == doctest::Approx(3.0));
  CHECK_THROWS_AS(epsilon_to_energy(-1e-3), DomainError);
}

TEST_CASE("epsilon_to_energy(0) is exactly the rest energy for any units") {
  for (const Units u : {Units{}, Units{1.05, 9.1, 3.0, 1.6, 8.85}, Units{0.5, 0.25, 2.0, 1.0, 1.0}}) {
    const auto e = epsilon_to_energy(0.0, u);
    CHECK(e.plus == u.rest_energy());
    CHECK(e.minus == -u.rest_energy());
  }
}

TEST_CASE("energy identity E^2 - m^2c^4 = hbar^2 c^2 eps^2") {
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> dist(0.0, 50.0);
  const Units u{0.7, 1.3, 2.1, 1.0, 1.0};
  for (int i = 0; i < 200; ++i) {
    const double eps2 = dist(gen);
    const auto e = epsilon_to_energy(eps2, u);
    const double mc2 = u.rest_energy(), hc = u.hbar * u.c;
    const double lhs = e.plus * e.plus - mc2 * mc2;
    CHECK(std::abs(lhs - hc * hc * eps2) <= 1e-13 * (mc2 * mc2 + hc * hc * eps2));
  }
}

TEST_CASE("nonrelativistic limit") {
  CHECK(nonrelativistic_limit(0.0) == 0.0);
  CHECK(nonrelativistic_limit(4.0) == doctest::Approx(2.0));  // oscillator n = 1, omega_T = 1
  CHECK(nonrelativistic_limit(0.02) == doctest::Approx(0.01));
  CHECK(std::abs(std::sqrt(1.02) - 1.0 - 0.01) < 1e-4);
}

TEST_CASE("nonrelativistic limit bounds E - mc^2 from above with a quartic gap") {
  // sqrt(1 + x) <= 1 + x/2, so the expansion overshoots by x^2/8.
  const Units u{};
  double previous_gap = 0.0;
  for (double eps2 = 0.08; eps2 > 1e-3; eps2 /= 2.0) {
    const double exact = epsilon_to_energy(eps2, u).plus - u.rest_energy();
    const double gap = nonrelativistic_limit(eps2, u) - exact;
    CHECK(gap >= 0.0);
    CHECK(gap == doctest::Approx(eps2 * eps2 / 8.0).epsilon(0.05));
    if (previous_gap > 0) CHECK(previous_gap / gap == doctest::Approx(4.0).epsilon(0.05));
    previous_gap = gap;
  }
}

TEST_CASE("RadialGrid") {
  const RadialGrid g(0.0, 1.0, 5);
  CHECK(g.spacing() == doctest::Approx(0.25));
  CHECK(g.r(4) == doctest::Approx(1.0));
  CHECK(g.points().size() == 5);
  CHECK_THROWS_AS(RadialGrid(1.0, 0.0, 10), ConfigError);
  CHECK_THROWS_AS(RadialGrid(0.0, 1.0, 2), ConfigError);
  const auto s = RadialGrid::with_spacing(0.0, 1.0, 0.1);
  CHECK(s.size() == 11);
  CHECK(s.spacing() == doctest::Approx(0.1));
}

TEST_CASE("family names round-trip") {
  for (const Family f : {Family::Oscillator, Family::Coulomb, Family::Morse, Family::AnharmonicQES,
                         Family::SexticQES, Family::DeformedCoulombQES, Family::Custom}) {
    CHECK(family_from_string(to_string(f)) == f);
  }
  CHECK_THROWS_AS(family_from_string("hydrogen"), ConfigError);
  CHECK(is_qes(Family::SexticQES));
  CHECK_FALSE(is_qes(Family::Morse));
}

TEST_CASE("ModelSpec validation") {
  ModelSpec m;
  CHECK_NOTHROW(m.validate());
  m.ell = -1;
  CHECK_THROWS_AS(m.validate(), ConfigError);
  m = ModelSpec{CoulombParams{0.0}, 0, {}};
  CHECK_THROWS_AS(m.validate(), ConfigError);
  m = ModelSpec{MorseParams{3.0, -1.0, 3.0}, 0, {}};
  CHECK_THROWS_AS(m.validate(), ConfigError);
  m = ModelSpec{OscillatorParams{}, 0, Units{0.0, 1.0, 1.0, 1.0, 1.0}};
  CHECK_THROWS_AS(m.validate(), ConfigError);
  Vector r(3), w(3);
  r << 0.0, 1.0, 0.5;
  w << 0.0, 0.0, 0.0;
  m = ModelSpec{CustomParams{r, w, w}, 0, {}};
  CHECK_THROWS_AS(m.validate(), ConfigError);
}

TEST_CASE("make_level rows satisfy the energy identity") {
  const Units u{};
  for (int n = 0; n < 6; ++n) {
    const auto level = make_level(n, 4.0 * n, Source::Analytic, u);
    CHECK(level.energy_plus * level.energy_plus - 1.0 == doctest::Approx(4.0 * n));
    CHECK(level.energy_minus == -level.energy_plus);
  }
  // Numeric ground levels may land a hair below zero.
  const auto tiny = make_level(0, -1e-6, Source::Numeric, u);
  CHECK(tiny.energy_plus < 1.0);
  CHECK_THROWS_AS(make_level(0, -1e-6, Source::Analytic, u), DomainError);
}

TEST_CASE("coulomb_kappa in natural units") {
  CHECK(coulomb_kappa(Units{}) == doctest::Approx(1.0 / (4.0 * M_PI)));
}
