#include "dirac2d/spectrum.hpp"
#include "dirac2d/verify.hpp"

#include <doctest.h>

#include <cmath>

using namespace dirac2d;

TEST_CASE("check names round-trip") {
  for (const Check c : all_checks()) CHECK(check_from_string(to_string(c)) == c);
  CHECK_THROWS_AS(check_from_string("sanity"), ConfigError);
}

TEST_CASE("every family passes all checks on its default grid") {
  for (const ModelSpec& m :
       {ModelSpec{OscillatorParams{1.0, 0.0}, 0, {}}, ModelSpec{OscillatorParams{1.0, 2.0}, 1, {}},
        ModelSpec{CoulombParams{1.0}, 0, {}}, ModelSpec{MorseParams{3.0, 1.0, 3.0}, 0, {}},
        ModelSpec{AnharmonicParams{1.0, 1.0, 1.0}, 0, {}}, ModelSpec{SexticParams{1.0, 1.0}, 1, {}},
        ModelSpec{DeformedCoulombParams{1.0, 1.0}, 0, {}}}) {
    const auto report = run_verification(m, default_grid(m), 3, all_checks());
    CHECK(report.entries.size() == all_checks().size());
    for (const auto& e : report.entries) {
      INFO(to_string(m.family()), " ", e.check, " ", e.metric, " ", e.detail);
      CHECK(e.passed);
      CHECK(e.metric < e.tolerance);
    }
    CHECK(report.all_passed());
  }
}

TEST_CASE("a coarse grid fails analytic_vs_numeric") {
  const ModelSpec m{OscillatorParams{1.0, 0.0}, 0, {}};
  const auto report = run_verification(m, RadialGrid(1e-3, 12.0, 50), 3, {Check::AnalyticVsNumeric});
  REQUIRE(report.entries.size() == 1);
  CHECK_FALSE(report.entries[0].passed);
  CHECK(report.entries[0].metric > report.entries[0].tolerance);
  CHECK_FALSE(report.all_passed());
  CHECK_FALSE(report.infrastructure_failure);
}

TEST_CASE("one entry per requested check, in order") {
  const ModelSpec m{CoulombParams{1.0}, 0, {}};
  const auto report = run_verification(m, default_grid(m), 2, {Check::Orthonormal, Check::Isospectral});
  REQUIRE(report.entries.size() == 2);
  CHECK(report.entries[0].check == "orthonormal");
  CHECK(report.entries[1].check == "isospectral");
}

TEST_CASE("Morse levels are capped at the bound set") {
  const ModelSpec m{MorseParams{3.0, 1.0, 3.0}, 0, {}};
  const auto report = run_verification(m, default_grid(m), 8, all_checks());
  CHECK(report.all_passed());
}

TEST_CASE("a single bound level passes intertwine trivially") {
  const ModelSpec m{MorseParams{1.0, 1.0, 0.8}, 0, {}};
  const auto report = run_verification(m, default_grid(m), 3, {Check::Intertwine});
  CHECK(report.entries[0].passed);
  CHECK(report.entries[0].detail == "no excited bound level");
}

TEST_CASE("solver failures become failed entries") {
  const ModelSpec m{OscillatorParams{}, 0, {}};
  const auto report = run_verification(m, RadialGrid(0.0, 10.0, 101), 2, {Check::Isospectral, Check::GroundResidual});
  CHECK(report.infrastructure_failure);
  CHECK_FALSE(report.all_passed());
  for (const auto& e : report.entries) {
    CHECK_FALSE(e.passed);
    CHECK(std::isnan(e.metric));
    CHECK_FALSE(e.detail.empty());
  }
}

TEST_CASE("custom models have no analytic reference") {
  const RadialGrid grid(0.0, 10.0, 2001);
  const ModelSpec m{CustomParams{grid.points(), grid.points(), Vector::Ones(grid.size())}, 0, {}};
  CHECK_THROWS_AS(run_verification(m, grid, 2, all_checks()), ConfigError);
  const auto report = run_verification(m, grid, 2, {Check::Isospectral, Check::Orthonormal, Check::GroundResidual});
  CHECK(report.all_passed());
}

TEST_CASE("negative n_max is rejected") {
  const ModelSpec m{};
  CHECK_THROWS_AS(run_verification(m, default_grid(m), -1, all_checks()), ConfigError);
}
