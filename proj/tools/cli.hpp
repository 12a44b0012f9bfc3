#ifndef DIRAC2D_TOOLS_CLI_HPP
#define DIRAC2D_TOOLS_CLI_HPP

#include "dirac2d/core.hpp"
#include "dirac2d/verify.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace dirac2d::cli {

enum ExitCode : int { kSuccess = 0, kChecksFailed = 1, kUsage = 2, kRuntime = 3 };

enum class Method { Analytic, Numeric, Both };
enum class Format { Csv, Json };

struct RunConfig {
  ModelSpec model;
  RadialGrid grid{0.0, 1.0, 3};
  int n_max = 3;
  Method method = Method::Analytic;
  Format format = Format::Csv;
  std::vector<Check> checks;
  int level = 0;  // wavefunction subcommand
};

/// Plain table: a header row and string cells, already formatted.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Shortest-form-independent 17 significant digit rendering, always with
/// '.' as decimal separator.
std::string format_double(double value);

/// RFC 4180: fields with ',', '"', CR or LF are quoted, quotes doubled.
void write_csv(const Table& table, std::ostream& out);
std::vector<std::vector<std::string>> parse_csv(std::istream& in);

/// Reads a custom superpotential table with columns r, w, w_prime.
CustomParams read_custom_table(const std::string& path);

struct SpectrumRow {
  Level level;
  bool has_delta = false;
  double delta = 0.0;  // numeric - analytic, on both rows of a pair
};

/// Named sample columns sharing one grid (wavefunction and partner output).
struct ColumnSet {
  std::vector<std::string> names;
  std::vector<Vector> columns;
  int n = -1;                // level index, wavefunction output only
  double epsilon_sq = 0.0;   // wavefunction output only
};

/// Builds a RunConfig from already-split arguments of one subcommand
/// (without the subcommand name). Throws ConfigError on bad input.
RunConfig parse_config(const std::vector<std::string>& args);

std::vector<SpectrumRow> spectrum_rows(const RunConfig& config);
ColumnSet wavefunction_columns(const RunConfig& config);
ColumnSet partner_columns(const RunConfig& config);

Table to_table(const std::vector<SpectrumRow>& rows);
Table to_table(const ColumnSet& columns);

/// Full command-line entry point. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dirac2d::cli

#endif  // DIRAC2D_TOOLS_CLI_HPP
