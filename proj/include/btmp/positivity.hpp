#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "btmp/meijer.hpp"

// The Mellin-convolution positivity certificate: pair numerator/denominator
// gamma shifts of the moment kernel so every ratio is a positive Beta-type
// factor, or report where sorted dominance fails.

namespace btmp {

struct ShiftLists {
  std::vector<Rational> numerators;    // shifts a with Gamma(s+a) upstairs
  std::vector<Rational> denominators;  // shifts b downstairs
};

/// Gamma shifts of the continued-moment kernel for a given M.
ShiftLists shift_lists(unsigned M);

struct PositivityReport {
  unsigned M;
  bool certified;
  std::vector<std::pair<Rational, Rational>> pairing;  // (a,b) with b >= a, sorted
  struct Witness {
    int index;
    Rational a;
    Rational b;
  };
  std::optional<Witness> witness;
};

/// Sorts both shift lists ascending; certified iff numerators[i] <=
/// denominators[i] for all i (equivalent to a bijection with b >= a per
/// pair; an equal pair is the unit factor and drops out of the product).
PositivityReport convolution_certificate(unsigned M);

/// x^a (1-x)^(b-a-1) / Gamma(b-a) on (0,1), the inverse Mellin transform of
/// Gamma(s+a)/Gamma(s+b); positive for b > a. The (1-x) exponent b-a-1 is
/// the one confirmed by the moment oracle (integral of x^n against it equals
/// Gamma(n+1+a)/Gamma(n+1+b)).
double beta_factor_density(const Rational& a, const Rational& b, double x);

}  // namespace btmp
