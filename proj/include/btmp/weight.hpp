#pragma once

#include <utility>
#include <vector>

#include "btmp/meijer.hpp"

// Numerical evaluation of the weight functions W_M(x) on (0,R) from their
// Slater decomposition, plus small-x structure and sign scanning.

namespace btmp {

/// Cached (un-normalized) Slater decomposition of W_M.
const WeightRepresentation& weight_representation(unsigned M);

/// W_M(x) for 0 < x < R (endpoints excluded; throws std::domain_error).
double weight(unsigned M, double x);

/// W_M(x) / A(M,0).
double weight_tilde(unsigned M, double x);

/// Exponents of the surviving Slater terms, ascending; the first governs
/// the x -> 0+ behavior.
std::vector<Rational> leading_exponents(unsigned M);

struct SignChangeReport {
  unsigned M;
  std::vector<std::pair<double, double>> negative_intervals;
  std::vector<double> roots;
  int grid_size;
};

/// Scans W_M on a uniform grid over [eps*R, (1-eps)*R], eps = 1e-6, brackets
/// sign changes and refines each root by bisection to 1e-10 * R.
SignChangeReport sign_scan(unsigned M, int grid_size);

}  // namespace btmp
