#include "cli.hpp"
#include "dirac2d/superpot.hpp"
#include "oracles.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace dirac2d;
using namespace dirac2d::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "dirac2d");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::istringstream in(text);
  return parse_csv(in);
}

std::vector<double> column(const std::vector<std::vector<std::string>>& rows, std::size_t c) {
  std::vector<double> values;
  for (std::size_t i = 1; i < rows.size(); ++i) values.push_back(std::strtod(rows[i][c].c_str(), nullptr));
  return values;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("dirac2d_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("spectrum: analytic oscillator") {
  const auto r = run_cli({"spectrum", "--model", "oscillator", "--omega", "1", "--B", "0", "--ell", "0", "--n-max", "3",
                          "--method", "analytic"});
  REQUIRE(r.code == kSuccess);
  const auto rows = csv(r.out);
  CHECK(rows[0] == std::vector<std::string>{"n", "epsilon_sq", "energy_plus", "energy_minus", "source"});
  const auto eps = column(rows, 1);
  REQUIRE(eps.size() == 4);
  for (int n = 0; n < 4; ++n) CHECK(eps[static_cast<std::size_t>(n)] == 4.0 * n);
  CHECK(r.err.empty());
}

TEST_CASE("spectrum: both interleaves with a delta column") {
  const auto r = run_cli({"spectrum", "--model", "oscillator", "--n-max", "3", "--method", "both"});
  REQUIRE(r.code == kSuccess);
  const auto rows = csv(r.out);
  CHECK(rows[0].back() == "delta");
  REQUIRE(rows.size() == 9);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][4] == (i % 2 ? "analytic" : "numeric"));
  for (const double d : column(rows, 5)) CHECK(std::abs(d) < 1e-3);
}

TEST_CASE("spectrum: usage errors") {
  auto r = run_cli({"spectrum", "--model", "morse", "--a", "3", "--b", "3", "--alpha", "1", "--n-max", "5"});
  CHECK(r.code == kUsage);
  CHECK(r.err.find("{0,1,2}") != std::string::npos);
  CHECK(r.out.empty());
  CHECK(run_cli({"spectrum", "--model", "sextic", "--method", "analytic", "--n-max", "2"}).code == kUsage);
  CHECK(run_cli({"spectrum", "--model", "sextic", "--method", "analytic", "--n-max", "0"}).code == kSuccess);
  CHECK(run_cli({"spectrum", "--model", "hydrogen"}).code == kUsage);
  CHECK(run_cli({"spectrum", "--format", "xml"}).code == kUsage);
  CHECK(run_cli({"spectrum", "--method", "guess"}).code == kUsage);
  CHECK(run_cli({"spectrum", "--grid", "0,1"}).code == kUsage);
  CHECK(run_cli({"spectrum", "--grid", "1,0,10"}).code == kUsage);
  CHECK(run_cli({"spectrum", "--omega", "fast"}).code == kUsage);
  CHECK(run_cli({"spectrum", "--bogus"}).code == kUsage);
  CHECK(run_cli({}).code == kUsage);
  CHECK(run_cli({"spectrum", "--model", "custom"}).code == kUsage);
}

TEST_CASE("spectrum: JSON keys") {
  const auto r = run_cli({"spectrum", "--model", "coulomb", "--n-max", "1", "--method", "both", "--format", "json"});
  REQUIRE(r.code == kSuccess);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["model"] == "coulomb");
  REQUIRE(doc["levels"].size() == 4);
  for (const auto& level : doc["levels"]) {
    for (const char* key : {"n", "epsilon_sq", "energy_plus", "energy_minus", "source", "delta"}) {
      CHECK(level.contains(key));
    }
    CHECK(level["epsilon_sq"].is_number());
  }
  CHECK(doc["levels"][2]["epsilon_sq"].get<double>() == doctest::Approx(0.75));
}

TEST_CASE("spectrum: QES numeric rows") {
  const auto r = run_cli({"spectrum", "--model", "sextic", "--ell", "1", "--n-max", "3"});
  REQUIRE(r.code == kSuccess);
  const auto rows = csv(r.out);
  CHECK(rows.size() == 5);
  CHECK(rows[1][4] == "numeric");
  CHECK(std::abs(column(rows, 1)[0]) < 5e-4);
}

TEST_CASE("every spectrum row satisfies the energy identity") {
  for (const std::string model : {"oscillator", "coulomb", "morse", "anharmonic", "sextic", "deformed-coulomb"}) {
    const auto config = parse_config({"--model", model, "--n-max", "2", "--method",
                                      model == "oscillator" || model == "coulomb" || model == "morse" ? "both" : "numeric"});
    for (const auto& row : spectrum_rows(config)) {
      const double e = row.level.energy_plus;
      CHECK(std::abs(e * e - 1.0 - row.level.epsilon_sq) < 1e-12 * std::max(1.0, e * e));
      CHECK(row.level.energy_minus == -e);
    }
  }
}

TEST_CASE("wavefunction output") {
  auto r = run_cli({"wavefunction", "--model", "oscillator", "--n", "0"});
  REQUIRE(r.code == kSuccess);
  auto rows = csv(r.out);
  CHECK(rows[0] == std::vector<std::string>{"r", "f_minus", "f_plus"});
  for (const double v : column(rows, 2)) CHECK(v == 0.0);

  r = run_cli({"wavefunction", "--model", "coulomb", "--ell", "0", "--n", "1"});
  REQUIRE(r.code == kSuccess);
  const auto fm = column(csv(r.out), 1);
  CHECK(oracle::sign_changes(Eigen::Map<const Eigen::VectorXd>(fm.data(), static_cast<Index>(fm.size()))) == 1);

  CHECK(run_cli({"wavefunction", "--model", "morse", "--n", "3"}).code == kUsage);
  CHECK(run_cli({"wavefunction", "--model", "sextic", "--n", "1", "--method", "analytic"}).code == kUsage);
  CHECK(run_cli({"wavefunction", "--model", "sextic", "--n", "1"}).code == kSuccess);
  CHECK(run_cli({"wavefunction", "--model", "oscillator", "--grid", "-1,5,101"}).code == kRuntime);
}

TEST_CASE("wavefunction columns are spinor-normalized") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--model", "oscillator", "--n", "2"}, {"--model", "morse", "--n", "1"},
        {"--model", "sextic", "--n", "2", "--ell", "1"}, {"--model", "anharmonic", "--n", "0", "--method", "analytic"},
        {"--model", "coulomb", "--n", "1", "--method", "numeric"}}) {
    const auto config = parse_config(args);
    const auto set = wavefunction_columns(config);
    const double norm = quadrature(Vector(set.columns[1].cwiseAbs2() + set.columns[2].cwiseAbs2()), config.grid);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("CSV round-trip is bit-exact") {
  const auto config = parse_config({"--model", "morse", "--n", "2"});
  const auto set = wavefunction_columns(config);
  std::ostringstream out;
  write_csv(to_table(set), out);
  const auto rows = csv(out.str());
  REQUIRE(rows.size() == static_cast<std::size_t>(config.grid.size()) + 1);
  for (std::size_t c = 0; c < 3; ++c) {
    const auto values = column(rows, c);
    for (std::size_t i = 0; i < values.size(); ++i) {
      CHECK(values[i] == set.columns[c][static_cast<Index>(i)]);
    }
  }
}

TEST_CASE("format_double round-trips binary64") {
  std::mt19937_64 gen(42);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int i = 0; i < 2000; ++i) {
    const double x = dist(gen) * std::pow(10.0, static_cast<int>(gen() % 40) - 20);
    CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
  }
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(-2.5) == "-2.5");
}

TEST_CASE("CSV quoting") {
  Table t{{"a", "b,c"}, {{"x\"y", "line\nbreak"}, {"plain", ""}}};
  std::ostringstream out;
  write_csv(t, out);
  CHECK(out.str() == "a,\"b,c\"\r\n\"x\"\"y\",\"line\nbreak\"\r\nplain,\r\n");
  const auto rows = csv(out.str());
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == t.header);
  CHECK(rows[1] == t.rows[0]);
  CHECK(rows[2] == t.rows[1]);
  std::istringstream bad("\"open");
  CHECK_THROWS_AS(parse_csv(bad), ConfigError);
}

TEST_CASE("partner output") {
  const auto config = parse_config({"--model", "anharmonic", "--a", "1"});
  const auto set = partner_columns(config);
  const auto w = superpotential_from_model(config.model);
  const Vector diff = set.columns[2] - set.columns[1] - 2.0 * w.sample_derivative(config.grid);
  CHECK(diff.cwiseAbs().maxCoeff() < 1e-12 * set.columns[2].cwiseAbs().maxCoeff());

  const auto r = run_cli({"partner", "--model", "sextic", "--ell", "1", "--omega-t", "1", "--b", "1", "--grid",
                          "1,3,201"});
  REQUIRE(r.code == kSuccess);
  const auto rows = csv(r.out);
  CHECK(std::strtod(rows[101][0].c_str(), nullptr) == doctest::Approx(2.0));
  CHECK(std::strtod(rows[101][1].c_str(), nullptr) == doctest::Approx(oracle::sextic_v(false, 1, 1.0, 1.0, 2.0)));
  CHECK(std::strtod(rows[101][1].c_str(), nullptr) == doctest::Approx(77.0));

  CHECK(run_cli({"partner", "--model", "coulomb", "--grid", "0,10,101"}).code == kRuntime);
}

TEST_CASE("custom tabulated model") {
  std::ostringstream table;
  table << "r,w,w_prime\n";
  const RadialGrid grid(0.0, 10.0, 1001);
  for (Index i = 0; i < grid.size(); ++i) table << format_double(grid.r(i)) << "," << format_double(grid.r(i)) << ",1\n";
  const auto path = temp_file("table.csv", table.str());
  const auto r = run_cli({"partner", "--model", "custom", "--table", path});
  REQUIRE(r.code == kSuccess);
  CHECK(csv(r.out).size() == static_cast<std::size_t>(grid.size()) + 1);
  const auto s = run_cli({"spectrum", "--model", "custom", "--table", path, "--n-max", "2"});
  CHECK(s.code == kSuccess);
  CHECK(run_cli({"spectrum", "--model", "custom", "--table", path, "--method", "analytic"}).code == kUsage);
  const auto v = run_cli({"verify", "--model", "custom", "--table", path, "--n-max", "2"});
  CHECK(v.code == kSuccess);
  CHECK(run_cli({"partner", "--model", "custom", "--table", path + ".missing"}).code == kUsage);
  std::remove(path.c_str());
}

TEST_CASE("verify: report schema and exit codes") {
  auto r = run_cli({"verify", "--model", "oscillator"});
  CHECK(r.code == kSuccess);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["passed"] == true);
  REQUIRE(doc["entries"].size() == 5);
  for (const auto& e : doc["entries"]) {
    for (const char* key : {"check", "status", "metric", "tolerance", "detail"}) CHECK(e.contains(key));
    CHECK(e["status"] == "pass");
  }

  r = run_cli({"verify", "--model", "oscillator", "--grid", "0.001,12,50", "--checks", "analytic_vs_numeric"});
  CHECK(r.code == kChecksFailed);
  doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["entries"].size() == 1);
  CHECK(doc["entries"][0]["status"] == "fail");
  CHECK(doc["entries"][0]["metric"].get<double>() > doc["entries"][0]["tolerance"].get<double>());

  r = run_cli({"verify", "--model", "oscillator", "--grid", "0,12,101", "--checks", "isospectral"});
  CHECK(r.code == kRuntime);
  doc = nlohmann::json::parse(r.out);
  CHECK(doc["entries"][0]["status"] == "fail");
  CHECK_FALSE(doc["entries"][0]["detail"].get<std::string>().empty());

  CHECK(run_cli({"verify", "--checks", "isospectral,bogus"}).code == kUsage);
}

TEST_CASE("config file fills unset flags and flags win") {
  const auto path = temp_file("config.json", R"({"model": "coulomb", "kappa": 2.0, "n-max": 1, "method": "analytic"})");
  auto r = run_cli({"spectrum", "--config", path});
  REQUIRE(r.code == kSuccess);
  auto eps = column(csv(r.out), 1);
  REQUIRE(eps.size() == 2);
  CHECK(eps[1] == doctest::Approx(4.0 * 0.75));
  r = run_cli({"spectrum", "--config", path, "--kappa", "1"});
  eps = column(csv(r.out), 1);
  CHECK(eps[1] == doctest::Approx(0.75));
  std::remove(path.c_str());

  const auto grid_path = temp_file("grid.json", R"({"grid": [0.001, 10, 1001], "checks": ["isospectral"]})");
  const auto config = parse_config({"--config", grid_path});
  CHECK(config.grid.size() == 1001);
  CHECK(config.checks == std::vector<Check>{Check::Isospectral});
  std::remove(grid_path.c_str());

  const auto broken = temp_file("broken.json", "{ not json");
  CHECK(run_cli({"spectrum", "--config", broken}).code == kUsage);
  std::remove(broken.c_str());
}

TEST_CASE("identical configuration gives identical bytes") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"spectrum", "--model", "morse", "--method", "both", "--n-max", "2"},
        {"wavefunction", "--model", "sextic", "--n", "1", "--format", "json"},
        {"verify", "--model", "coulomb"}}) {
    CHECK(run_cli(args).out == run_cli(args).out);
  }
}

TEST_CASE("default method follows the family") {
  CHECK(parse_config({"--model", "oscillator"}).method == Method::Analytic);
  CHECK(parse_config({"--model", "anharmonic"}).method == Method::Numeric);
  CHECK_THROWS_AS(parse_config({"--model", "custom"}), ConfigError);
}
