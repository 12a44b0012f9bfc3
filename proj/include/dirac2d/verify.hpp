#ifndef DIRAC2D_VERIFY_HPP
#define DIRAC2D_VERIFY_HPP

#include "dirac2d/core.hpp"

#include <string>
#include <vector>

namespace dirac2d {

enum class Check { Isospectral, Intertwine, Orthonormal, GroundResidual, AnalyticVsNumeric };

std::string to_string(Check check);
Check check_from_string(const std::string& name);
std::vector<Check> all_checks();

struct VerifyEntry {
  std::string check;
  bool passed = false;
  double metric = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;
  /// Set when a check could not run at all (solver failure, bad grid).
  bool infrastructure_failure = false;

  bool all_passed() const;
};

/// Runs the requested self-consistency checks for levels 0..n_max:
///   isospectral          eigs(V+)[i] vs eigs(V-)[i+1], tol 2e-3
///   intertwine           | ||(d/dr + W) f-(n)|| - eps(n) | / eps(n), tol 1e-2
///   orthonormal          max |Gram(f-(0..n_max)) - I|, tol 1e-6 (Morse 1e-4,
///                        numeric eigenvectors 1e-5)
///   ground_residual      sup |-f0'' + V- f0| / sup |f0|, tol max(1e-4, 100 h^2)
///   analytic_vs_numeric  max |eps2_a - eps2_n| / max(1, eps2_a), tol 1e-3
///                        (QES: |numeric level 0| < 5e-4)
/// Exactly solvable families use the Laguerre states, QES and custom models
/// the numeric eigenvectors of V-.
VerifyReport run_verification(const ModelSpec& model, const RadialGrid& grid, int n_max,
                              const std::vector<Check>& checks);

}  // namespace dirac2d

#endif  // DIRAC2D_VERIFY_HPP
