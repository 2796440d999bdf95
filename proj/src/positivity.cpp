#include "btmp/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "btmp/special.hpp"

namespace btmp {

ShiftLists shift_lists(unsigned M) {
  long m = static_cast<long>(M);
  ShiftLists s;
  for (long i = -2; i <= 1; ++i) {
    Rational v(2 * m + i, 4);
    v.canonicalize();
    s.numerators.push_back(v);
  }
  for (long i = 1; i <= 3; ++i) {
    Rational v(2 * m + i, 3);
    v.canonicalize();
    s.denominators.push_back(v);
  }
  s.denominators.push_back(0);
  return s;
}

PositivityReport convolution_certificate(unsigned M) {
  ShiftLists s = shift_lists(M);
  std::sort(s.numerators.begin(), s.numerators.end());
  std::sort(s.denominators.begin(), s.denominators.end());
  PositivityReport report{M, true, {}, {}};
  for (size_t i = 0; i < 4; ++i) {
    // Equality is allowed: Gamma(s+a)/Gamma(s+a) = 1 is the trivial factor
    // (the identity under Mellin convolution), still a positive measure.
    if (s.numerators[i] > s.denominators[i]) {
      report.certified = false;
      report.witness = PositivityReport::Witness{static_cast<int>(i), s.numerators[i],
                                                 s.denominators[i]};
      report.pairing.clear();
      return report;
    }
    report.pairing.emplace_back(s.numerators[i], s.denominators[i]);
  }
  return report;
}

double beta_factor_density(const Rational& a, const Rational& b, double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw std::domain_error("beta_factor_density: x must lie in (0,1)");
  }
  if (!(b > a)) {
    throw std::domain_error("beta_factor_density: requires b > a");
  }
  double ad = a.get_d(), bd = b.get_d();
  double lg = log_gamma_signed(bd - ad).log_abs;
  return std::exp(ad * std::log(x) + (bd - ad - 1.0) * std::log1p(-x) - lg);
}

}  // namespace btmp
