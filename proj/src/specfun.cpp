#include "dirac2d/specfun.hpp"

namespace dirac2d {

double ln_gamma(double x) {
  if (!(x > 0)) throw DomainError("ln_gamma: argument must be > 0");
  return std::lgamma(x);
}

}  // namespace dirac2d
