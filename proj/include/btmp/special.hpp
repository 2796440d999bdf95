#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

// Real-argument gamma machinery and a generalized hypergeometric series
// evaluator with rigorous truncation control.

namespace btmp {

struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};
struct DivergenceError : std::domain_error {
  using std::domain_error::domain_error;
};
struct NoConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Γ(x) represented as sign * exp(log_abs); the sign is tracked exactly
/// through the reflection region x < 0.
struct SignedLogGamma {
  double log_abs;
  int sign;  // +1 or -1

  double value() const;
};

/// Signed log-gamma for real x outside the poles {0, -1, -2, ...}.
/// Throws PoleError when x is within 1e-12 of a nonpositive integer.
SignedLogGamma log_gamma_signed(double x);

/// Rising factorial (a)_k = a(a+1)...(a+k-1); exactly 0 when a is a
/// nonpositive integer with k > |a|.
double pochhammer(const mpq_class& a, unsigned k);

struct HypSeriesParams {
  std::vector<mpq_class> numerator_params;
  std::vector<mpq_class> denominator_params;
  double argument = 0.0;
  double rel_tol = 1e-12;
};

struct HypResult {
  double value;
  double achieved_tol;
  long terms;
  bool extended_precision;  // double-double fallback was engaged
};

/// pFq series with compensated summation. Stops after three consecutive
/// terms below rel_tol * |sum|. When the largest partial-sum magnitude
/// exceeds 1e6 times the final value the series is re-summed in
/// double-double precision (cancellation near argument -> 1).
///
/// Throws std::invalid_argument for a nonpositive-integer denominator
/// parameter, DivergenceError outside the convergence domain, and
/// NoConvergenceError past 1e6 terms.
HypResult hyp_pfq(const HypSeriesParams& params);

}  // namespace btmp
