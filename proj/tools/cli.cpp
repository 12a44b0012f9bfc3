#include "cli.hpp"

#include "dirac2d/analytic.hpp"
#include "dirac2d/qes.hpp"
#include "dirac2d/spectrum.hpp"
#include "dirac2d/superpot.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace dirac2d::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RawOptions {
  std::optional<std::string> model, format, method, grid, checks, table, config;
  std::optional<double> omega, B, kappa, a, b, alpha, e2, omega_t;
  std::optional<int> ell, n_max, n;
};

void register_options(CLI::App& app, RawOptions& o) {
  app.add_option("--model", o.model, "oscillator|coulomb|morse|anharmonic|sextic|deformed-coulomb|custom");
  app.add_option("--format", o.format, "csv|json");
  app.add_option("--method", o.method, "analytic|numeric|both");
  app.add_option("--grid", o.grid, "r_min,r_max,n_points");
  app.add_option("--checks", o.checks, "comma list of verification checks");
  app.add_option("--table", o.table, "CSV table r,w,w_prime for --model custom");
  app.add_option("--config", o.config, "JSON file whose keys mirror the flag names");
  app.add_option("--omega", o.omega, "oscillator frequency");
  app.add_option("--B", o.B, "magnetic field");
  app.add_option("--kappa", o.kappa, "Coulomb strength m e^2/(4 pi eps0 hbar^2)");
  app.add_option("--a", o.a);
  app.add_option("--b", o.b);
  app.add_option("--alpha", o.alpha, "Morse range parameter");
  app.add_option("--e2", o.e2, "deformed Coulomb charge e^2");
  app.add_option("--omega-t", o.omega_t, "total frequency omega_T (QES families)");
  app.add_option("--ell", o.ell, "angular label");
  app.add_option("--n-max", o.n_max, "highest level index");
  app.add_option("--n", o.n, "level index (wavefunction)");
}

std::string json_list(const Json& value) {
  if (!value.is_array()) return value.get<std::string>();
  std::string joined;
  for (const auto& item : value) {
    if (!joined.empty()) joined += ",";
    joined += item.is_string() ? item.get<std::string>() : item.dump();
  }
  return joined;
}

template <typename T>
void fill(std::optional<T>& slot, const Json& cfg, const char* key) {
  if (slot || !cfg.contains(key)) return;
  slot = cfg.at(key).get<T>();
}

// Flags win; config-file keys only fill what the command line left unset.
void merge_config_file(RawOptions& o) {
  std::ifstream in(*o.config);
  if (!in) throw ConfigError("cannot open config file '" + *o.config + "'");
  Json cfg;
  try {
    cfg = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("config file: ") + e.what());
  }
  if (!cfg.is_object()) throw ConfigError("config file must hold a JSON object");
  try {
    fill(o.model, cfg, "model");
    fill(o.format, cfg, "format");
    fill(o.method, cfg, "method");
    fill(o.table, cfg, "table");
    if (!o.grid && cfg.contains("grid")) o.grid = json_list(cfg.at("grid"));
    if (!o.checks && cfg.contains("checks")) o.checks = json_list(cfg.at("checks"));
    fill(o.omega, cfg, "omega");
    fill(o.B, cfg, "B");
    fill(o.kappa, cfg, "kappa");
    fill(o.a, cfg, "a");
    fill(o.b, cfg, "b");
    fill(o.alpha, cfg, "alpha");
    fill(o.e2, cfg, "e2");
    fill(o.omega_t, cfg, "omega-t");
    fill(o.ell, cfg, "ell");
    fill(o.n_max, cfg, "n-max");
    fill(o.n, cfg, "n");
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("config file: ") + e.what());
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

double parse_number(const std::string& text) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = first + text.size();
  while (first < last && *first == ' ') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) throw ConfigError("not a number: '" + text + "'");
  return value;
}

RadialGrid parse_grid(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw ConfigError("--grid expects r_min,r_max,n_points");
  const double n = parse_number(parts[2]);
  if (n != std::floor(n)) throw ConfigError("--grid n_points must be an integer");
  return RadialGrid(parse_number(parts[0]), parse_number(parts[1]), static_cast<Index>(n));
}

ModelSpec build_model(const RawOptions& o) {
  ModelSpec model;
  model.ell = o.ell.value_or(0);
  switch (family_from_string(o.model.value_or("oscillator"))) {
    case Family::Oscillator:
      model.params = OscillatorParams{o.omega.value_or(1.0), o.B.value_or(0.0)};
      break;
    case Family::Coulomb:
      model.params = CoulombParams{o.kappa.value_or(1.0)};
      break;
    case Family::Morse: {
      const MorseParams d;
      model.params = MorseParams{o.a.value_or(d.a), o.alpha.value_or(d.alpha), o.b.value_or(d.b)};
      break;
    }
    case Family::AnharmonicQES: {
      const AnharmonicParams d;
      model.params = AnharmonicParams{o.a.value_or(d.a), o.omega_t.value_or(d.omega_t), o.b.value_or(d.b)};
      break;
    }
    case Family::SexticQES: {
      const SexticParams d;
      model.params = SexticParams{o.omega_t.value_or(d.omega_t), o.b.value_or(d.b)};
      break;
    }
    case Family::DeformedCoulombQES: {
      const DeformedCoulombParams d;
      model.params = DeformedCoulombParams{o.e2.value_or(d.e2), o.omega_t.value_or(d.omega_t)};
      break;
    }
    case Family::Custom:
      if (!o.table) throw ConfigError("--model custom needs --table <csv with r,w,w_prime>");
      model.params = read_custom_table(*o.table);
      break;
  }
  model.validate();
  return model;
}

RunConfig build_config(RawOptions o) {
  if (o.config) merge_config_file(o);
  RunConfig config;
  config.model = build_model(o);
  config.grid = o.grid ? parse_grid(*o.grid) : default_grid(config.model);
  config.n_max = o.n_max.value_or(3);
  if (config.n_max < 0) throw ConfigError("--n-max must be >= 0");
  config.level = o.n.value_or(0);
  if (config.level < 0) throw ConfigError("--n must be >= 0");

  const Family family = config.model.family();
  const bool closed_form = family == Family::Oscillator || family == Family::Coulomb || family == Family::Morse;
  const std::string method = o.method.value_or(closed_form ? "analytic" : "numeric");
  if (method == "analytic") {
    config.method = Method::Analytic;
  } else if (method == "numeric") {
    config.method = Method::Numeric;
  } else if (method == "both") {
    config.method = Method::Both;
  } else {
    throw ConfigError("--method must be analytic, numeric or both");
  }

  const std::string format = o.format.value_or("csv");
  if (format == "csv") {
    config.format = Format::Csv;
  } else if (format == "json") {
    config.format = Format::Json;
  } else {
    throw ConfigError("--format must be csv or json");
  }

  if (o.checks) {
    for (const auto& name : split(*o.checks, ',')) config.checks.push_back(check_from_string(name));
  } else {
    config.checks = all_checks();
    if (family == Family::Custom) config.checks.pop_back();  // no analytic reference
  }
  return config;
}

void require_bound_levels(const ModelSpec& model, int highest) {
  const int bound = bound_state_count(model);
  if (bound >= 0 && highest >= bound) {
    std::string set;
    for (int n = 0; n < bound; ++n) set += (n ? "," : "") + std::to_string(n);
    throw ConfigError("only n in {" + set + "} are bound for these parameters");
  }
}

void require_analytic_levels(const ModelSpec& model, int highest) {
  if (model.family() == Family::Custom) throw ConfigError("custom superpotentials have no analytic levels");
  if (is_qes(model.family()) && highest > 0) {
    throw ConfigError("QES families are analytic only at level 0; use --method numeric");
  }
}

Json to_json(const std::vector<SpectrumRow>& rows, const RunConfig& config) {
  Json levels = Json::array();
  for (const auto& row : rows) {
    Json item;
    item["n"] = row.level.n;
    item["epsilon_sq"] = row.level.epsilon_sq;
    item["energy_plus"] = row.level.energy_plus;
    item["energy_minus"] = row.level.energy_minus;
    item["source"] = to_string(row.level.source);
    if (row.has_delta) item["delta"] = row.delta;
    levels.push_back(std::move(item));
  }
  Json doc;
  doc["model"] = to_string(config.model.family());
  doc["levels"] = std::move(levels);
  return doc;
}

Json to_json(const ColumnSet& set, const RunConfig& config) {
  Json doc;
  doc["model"] = to_string(config.model.family());
  if (set.n >= 0) {
    doc["n"] = set.n;
    doc["epsilon_sq"] = set.epsilon_sq;
  }
  for (std::size_t c = 0; c < set.names.size(); ++c) {
    doc[set.names[c]] = std::vector<double>(set.columns[c].data(), set.columns[c].data() + set.columns[c].size());
  }
  return doc;
}

Json to_json(const VerifyReport& report, const RunConfig& config) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json item;
    item["check"] = e.check;
    item["status"] = e.passed ? "pass" : "fail";
    item["metric"] = e.metric;
    item["tolerance"] = e.tolerance;
    item["detail"] = e.detail;
    entries.push_back(std::move(item));
  }
  Json doc;
  doc["model"] = to_string(config.model.family());
  doc["grid"] = {{"r_min", config.grid.r_min()}, {"r_max", config.grid.r_max()}, {"n_points", config.grid.size()}};
  doc["passed"] = report.all_passed();
  doc["entries"] = std::move(entries);
  return doc;
}

template <typename Rows>
void emit(const Rows& rows, const RunConfig& config, std::ostream& out) {
  if (config.format == Format::Json) {
    out << to_json(rows, config).dump(2) << "\n";
  } else {
    write_csv(to_table(rows), out);
  }
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, 17);
  if (ec != std::errc()) throw NumericError("format_double: conversion failed");
  return std::string(buffer, ptr);
}

void write_csv(const Table& table, std::ostream& out) {
  const auto write_row = [&out](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      const auto& field = row[i];
      if (field.find_first_of(",\"\r\n") == std::string::npos) {
        out << field;
        continue;
      }
      out << '"';
      for (const char ch : field) {
        if (ch == '"') out << '"';
        out << ch;
      }
      out << '"';
    }
    out << "\r\n";
  };
  write_row(table.header);
  for (const auto& row : table.rows) write_row(row);
}

std::vector<std::vector<std::string>> parse_csv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  char ch;
  const auto end_row = [&] {
    row.push_back(std::move(field));
    field.clear();
    rows.push_back(std::move(row));
    row.clear();
    any = false;
  };
  while (in.get(ch)) {
    if (quoted) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get(ch);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
      continue;
    }
    switch (ch) {
      case '"': quoted = true; any = true; break;
      case ',': row.push_back(std::move(field)); field.clear(); any = true; break;
      case '\r': break;
      case '\n': end_row(); break;
      default: field += ch; any = true; break;
    }
  }
  if (quoted) throw ConfigError("csv: unterminated quoted field");
  if (any || !field.empty() || !row.empty()) end_row();
  return rows;
}

CustomParams read_custom_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open table '" + path + "'");
  const auto rows = parse_csv(in);
  if (rows.size() < 3) throw ConfigError("custom table needs a header and at least two rows");
  const auto& header = rows.front();
  const auto column = [&](const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    throw ConfigError("custom table lacks column '" + name + "'");
  };
  const std::size_t ir = column("r"), iw = column("w"), iwp = column("w_prime");
  const auto n = static_cast<Index>(rows.size() - 1);
  CustomParams p{Vector(n), Vector(n), Vector(n)};
  for (Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i + 1)];
    if (row.size() != header.size()) throw ConfigError("custom table: ragged row " + std::to_string(i + 1));
    p.r[i] = parse_number(row[ir]);
    p.w[i] = parse_number(row[iw]);
    p.w_prime[i] = parse_number(row[iwp]);
  }
  return p;
}

RunConfig parse_config(const std::vector<std::string>& args) {
  CLI::App app{"dirac2d options"};
  RawOptions raw;
  register_options(app, raw);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  return build_config(raw);
}

std::vector<SpectrumRow> spectrum_rows(const RunConfig& config) {
  const ModelSpec& model = config.model;
  require_bound_levels(model, config.n_max);
  if (config.method != Method::Numeric) require_analytic_levels(model, config.n_max);

  std::vector<SpectrumRow> rows;
  if (config.method == Method::Analytic) {
    for (const auto& level : analytic_spectrum(model, config.n_max).levels) rows.push_back({level});
    return rows;
  }
  const auto numeric = numeric_spectrum(model, config.grid, config.n_max + 1);
  if (config.method == Method::Numeric) {
    for (const auto& level : numeric.levels) rows.push_back({level});
    return rows;
  }
  const auto analytic = analytic_spectrum(model, config.n_max);
  for (std::size_t i = 0; i < analytic.levels.size(); ++i) {
    const double delta = numeric.levels[i].epsilon_sq - analytic.levels[i].epsilon_sq;
    rows.push_back({analytic.levels[i], true, delta});
    rows.push_back({numeric.levels[i], true, delta});
  }
  return rows;
}

ColumnSet wavefunction_columns(const RunConfig& config) {
  const ModelSpec& model = config.model;
  const int n = config.level;
  require_bound_levels(model, n);
  const Family family = model.family();
  const auto w = superpotential_from_model(model);

  RadialWavefunction psi{config.grid, Vector(), Vector(), n, 0.0};
  if (config.method == Method::Numeric || family == Family::Custom) {
    auto pairs = lower_eigenpairs(model, config.grid, n + 1);
    const auto idx = static_cast<std::size_t>(n);
    psi = spinor_from_lower(w, std::move(pairs.vectors[idx]), n, pairs.values[idx], config.grid);
  } else if (is_qes(family)) {
    require_analytic_levels(model, n);
    psi = spinor_from_lower(w, qes_closed_form_ground_state(model, config.grid), 0, 0.0, config.grid);
  } else {
    psi = analytic_wavefunction(n, model, config.grid);
  }
  return {{"r", "f_minus", "f_plus"}, {config.grid.points(), psi.f_minus, psi.f_plus}, n, psi.epsilon_sq};
}

ColumnSet partner_columns(const RunConfig& config) {
  const auto pp = partner_potentials(superpotential_from_model(config.model), config.grid);
  return {{"r", "v_minus", "v_plus"}, {config.grid.points(), pp.v_minus, pp.v_plus}};
}

Table to_table(const std::vector<SpectrumRow>& rows) {
  Table table{{"n", "epsilon_sq", "energy_plus", "energy_minus", "source"}, {}};
  const bool with_delta = !rows.empty() && rows.front().has_delta;
  if (with_delta) table.header.push_back("delta");
  for (const auto& row : rows) {
    std::vector<std::string> cells{std::to_string(row.level.n), format_double(row.level.epsilon_sq),
                                   format_double(row.level.energy_plus), format_double(row.level.energy_minus),
                                   to_string(row.level.source)};
    if (with_delta) cells.push_back(format_double(row.delta));
    table.rows.push_back(std::move(cells));
  }
  return table;
}

Table to_table(const ColumnSet& set) {
  Table table{set.names, {}};
  const Index n = set.columns.empty() ? 0 : set.columns.front().size();
  for (Index i = 0; i < n; ++i) {
    std::vector<std::string> cells;
    for (const auto& column : set.columns) cells.push_back(format_double(column[i]));
    table.rows.push_back(std::move(cells));
  }
  return table;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Superpotential construction and spectra of the (2+1)-dimensional Dirac equation"};
  app.name("dirac2d");
  app.require_subcommand(1);
  RawOptions raw;
  auto* spectrum = app.add_subcommand("spectrum", "eps^2 and energies per level");
  auto* wavefunction = app.add_subcommand("wavefunction", "spinor components f-, f+ on the grid");
  auto* partner = app.add_subcommand("partner", "partner potentials V- = W^2 - W', V+ = W^2 + W'");
  auto* verify = app.add_subcommand("verify", "run the self-consistency checks, JSON report");
  for (auto* sub : {spectrum, wavefunction, partner, verify}) register_options(*sub, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    RunConfig config = build_config(raw);
    if (spectrum->parsed()) {
      emit(spectrum_rows(config), config, out);
    } else if (wavefunction->parsed()) {
      emit(wavefunction_columns(config), config, out);
    } else if (partner->parsed()) {
      emit(partner_columns(config), config, out);
    } else {
      VerifyReport report;
      try {
        report = run_verification(config.model, config.grid, config.n_max, config.checks);
      } catch (const ConfigError&) {
        throw;
      } catch (const std::exception& e) {
        report.infrastructure_failure = true;
        report.entries.push_back({"infrastructure", false, std::nan(""), 0.0, e.what()});
      }
      out << to_json(report, config).dump(2) << "\n";
      if (report.infrastructure_failure) return kRuntime;
      return report.all_passed() ? kSuccess : kChecksFailed;
    }
  } catch (const ConfigError& e) {
    err << "dirac2d: usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const NoBoundStateError& e) {
    err << "dirac2d: usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "dirac2d: error: " << e.what() << "\n";
    return kRuntime;
  }
  return kSuccess;
}

}  // namespace dirac2d::cli
