#pragma once

#include <functional>
#include <string>
#include <vector>

// Tanh-sinh quadrature on finite intervals with algebraic endpoint
// singularities, and the numerical verification of the moment, continued
// moment, ogf and Stieltjes identities.

namespace btmp {

struct QuadratureResult {
  double value;
  double abs_error_estimate;
  long evaluations;
  bool converged;
};

/// Double-exponential (tanh-sinh) rule with level doubling until two
/// successive levels agree within rel_tol or max_level is reached. Endpoint
/// nodes are never evaluated exactly at lo/hi. A NaN integrand value throws.
QuadratureResult integrate_de(const std::function<double(double)>& f, double lo, double hi,
                              double rel_tol, int max_level = 12);

struct VerificationReport {
  std::string name;
  int M;
  double parameter;  // n or z
  double expected;
  double computed;
  double rel_error;
  bool passed;
  double tolerance;
};

/// Quadrature moment of x^n against W_M over (0,R) versus the exact A(M,n).
VerificationReport moment_numeric(unsigned M, unsigned n, double rel_tol);

/// Continued-moment kernel r_W(M) R^s * (gamma ratio), equal to A(M, s-1).
/// Throws std::domain_error below the convergence bound s >= 1/4 - M/2;
/// returns +inf at poles of the numerator gammas.
double moment_continuation(unsigned M, double s);

/// Ordinary generating function of the moments, a single 4F3 in R*z.
/// Throws DivergenceError for R*z > 1.
double ogf(unsigned M, double z);

/// (1/z) ogf(M, 1/z) for z > R.
double stieltjes_lhs(unsigned M, double z);

/// Quadrature of W_M(x)/(z-x) over (0,R) for z > R; integrals with z barely
/// above R are split at x = R-(z-R).
QuadratureResult stieltjes_rhs(unsigned M, double z, double rel_tol);

/// Runs the moment grid, continuation spot checks, Stieltjes comparisons and
/// the positivity-vs-scan agreement; failures become reports, not errors.
std::vector<VerificationReport> verify_suite(const std::vector<unsigned>& M_values,
                                             unsigned n_max, const std::vector<double>& z_list,
                                             double rel_tol);

}  // namespace btmp
