#include "dirac2d/numsolve.hpp"

#include "dirac2d/superpot.hpp"

namespace dirac2d {

IsospectralReport isospectral_check(const PartnerPotentials& pp, Index k, double tol) {
  if (k < 2) throw ConfigError("isospectral_check: need k >= 2");
  constexpr double kEigenTol = 1e-10;
  IsospectralReport report;
  report.tolerance = tol;
  report.lower = lowest_eigenvalues(lower_operator(pp), k, kEigenTol);
  report.upper = lowest_eigenvalues(upper_operator(pp), k - 1, kEigenTol);
  for (std::size_t i = 0; i < report.upper.size(); ++i) {
    const double d = std::abs(report.upper[i] - report.lower[i + 1]);
    report.deviations.push_back(d);
    report.max_deviation = std::max(report.max_deviation, d);
  }
  return report;
}

}  // namespace dirac2d
