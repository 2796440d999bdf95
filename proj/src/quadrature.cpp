#include "btmp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "btmp/exact.hpp"
#include "btmp/positivity.hpp"
#include "btmp/special.hpp"
#include "btmp/weight.hpp"

namespace btmp {

namespace {

constexpr double kRadius = 256.0 / 27.0;
constexpr double kUMax = 6.0;
constexpr double kHalfPi = 1.5707963267948966;

struct DeEvaluator {
  const std::function<double(double)>& f;
  double lo, hi, mid, half;
  long evaluations = 0;

  // Weighted integrand value at abscissa parameter u; 0 when the node
  // collapses onto an endpoint.
  double node(double u) {
    double w = kHalfPi * std::sinh(u);
    double aw = std::abs(w);
    // distance from the near endpoint: half * (1 - tanh|w|) = half * 2/(1+e^{2|w|})
    double delta = half * 2.0 / (1.0 + std::exp(2.0 * aw));
    if (delta <= 0.0) return 0.0;
    double x = (u >= 0.0) ? hi - delta : lo + delta;
    if (!(x > lo && x < hi)) return 0.0;
    double e = std::exp(-2.0 * aw);
    double sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
    double dw = half * kHalfPi * std::cosh(u) * sech2;
    double fx = f(x);
    ++evaluations;
    if (std::isnan(fx)) {
      throw std::runtime_error("integrate_de: integrand returned NaN");
    }
    return fx * dw;
  }
};

// Sums one side (sign = +1/-1) of a trapezoid level, walking outward and
// truncating once contributions are negligible.
double sum_side(DeEvaluator& ev, double h, double start, int stride, int sign) {
  double sum = 0.0;
  int small_streak = 0;
  for (double k = start;; k += stride) {
    double u = sign * k * h;
    if (std::abs(u) > kUMax) break;
    double g = ev.node(u);
    sum += g;
    double scale = std::max(std::abs(sum), 1e-300);
    if (std::abs(g) < 1e-17 * scale && std::abs(u) > 1.0) {
      if (++small_streak >= 4) break;
    } else {
      small_streak = 0;
    }
  }
  return sum;
}

}  // namespace

QuadratureResult integrate_de(const std::function<double(double)>& f, double lo, double hi,
                              double rel_tol, int max_level) {
  if (!(lo < hi)) throw std::invalid_argument("integrate_de: requires lo < hi");
  DeEvaluator ev{f, lo, hi, 0.5 * (lo + hi), 0.5 * (hi - lo)};

  double h = 1.0;
  double raw = ev.node(0.0) + sum_side(ev, h, 1, 1, +1) + sum_side(ev, h, 1, 1, -1);
  double integral = h * raw;
  double err = std::numeric_limits<double>::infinity();
  bool converged = false;
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    double odd = sum_side(ev, h, 1, 2, +1) + sum_side(ev, h, 1, 2, -1);
    double next = 0.5 * integral + h * odd;
    err = std::abs(next - integral);
    integral = next;
    if (level >= 3 && err <= rel_tol * std::max(std::abs(integral), 1e-300)) {
      converged = true;
      break;
    }
  }
  return {integral, err, ev.evaluations, converged};
}

VerificationReport moment_numeric(unsigned M, unsigned n, double rel_tol) {
  auto integrand = [M, n](double x) { return std::pow(x, static_cast<double>(n)) * weight(M, x); };
  auto quad = integrate_de(integrand, 0.0, kRadius, rel_tol * 0.1);
  double expected = brown_tutte(M, n).get_d();
  double rel_error = std::abs(quad.value - expected) / std::abs(expected);
  return {"moment", static_cast<int>(M), static_cast<double>(n),
          expected, quad.value, rel_error,
          quad.converged && rel_error <= rel_tol, rel_tol};
}

double moment_continuation(unsigned M, double s) {
  const double bound = 0.25 - 0.5 * M;
  if (s < bound - 1e-15) {
    throw std::domain_error("moment_continuation: s below the convergence bound 1/4 - M/2");
  }
  const double num_args[4] = {s - 0.5 + 0.5 * M, s - 0.25 + 0.5 * M, s + 0.5 * M,
                              s + 0.25 + 0.5 * M};
  const double den_args[4] = {s + (2.0 * M + 1.0) / 3.0, s + (2.0 * M + 2.0) / 3.0,
                              s + (2.0 * M + 3.0) / 3.0, s};
  auto at_pole = [](double x) {
    return x <= 0.5 && std::abs(x - std::nearbyint(x)) <= 1e-12 && std::nearbyint(x) <= 0.0;
  };
  for (double a : num_args) {
    if (at_pole(a)) return std::numeric_limits<double>::infinity();
  }
  for (double b : den_args) {
    if (at_pole(b)) return 0.0;  // Gamma pole downstairs kills the ratio
  }
  double lg = 0.0;
  int sign = 1;
  for (double a : num_args) {
    auto g = log_gamma_signed(a);
    lg += g.log_abs;
    sign *= g.sign;
  }
  for (double b : den_args) {
    auto g = log_gamma_signed(b);
    lg -= g.log_abs;
    sign *= g.sign;
  }
  return prefactor_rw(M) * sign * std::exp(s * std::log(kRadius) + lg);
}

double ogf(unsigned M, double z) {
  double rz = kRadius * z;
  if (rz > 1.0 || rz < -1.0) {
    throw DivergenceError("ogf: series requires |R*z| <= 1");
  }
  ExactRational c0(2 * factorial(2 * M + 1), factorial(M + 2) * factorial(M));
  c0.canonicalize();
  HypSeriesParams params;
  params.numerator_params = delta_list(4, 2 * static_cast<long>(M) + 2).values;
  params.denominator_params = delta_list(3, 2 * static_cast<long>(M) + 4).values;
  params.argument = rz;
  params.rel_tol = 1e-13;
  return c0.get_d() * hyp_pfq(params).value;
}

double stieltjes_lhs(unsigned M, double z) {
  if (!(z > kRadius)) throw std::domain_error("stieltjes_lhs: requires z > R");
  return ogf(M, 1.0 / z) / z;
}

QuadratureResult stieltjes_rhs(unsigned M, double z, double rel_tol) {
  if (!(z > kRadius)) throw std::domain_error("stieltjes_rhs: requires z > R");
  auto integrand = [M, z](double x) { return weight(M, x) / (z - x); };
  double split = kRadius - (z - kRadius);
  if (z < 1.1 * kRadius && split > 0.0 && split < kRadius) {
    auto a = integrate_de(integrand, 0.0, split, rel_tol);
    auto b = integrate_de(integrand, split, kRadius, rel_tol);
    return {a.value + b.value, a.abs_error_estimate + b.abs_error_estimate,
            a.evaluations + b.evaluations, a.converged && b.converged};
  }
  return integrate_de(integrand, 0.0, kRadius, rel_tol);
}

std::vector<VerificationReport> verify_suite(const std::vector<unsigned>& M_values,
                                             unsigned n_max, const std::vector<double>& z_list,
                                             double rel_tol) {
  std::vector<VerificationReport> reports;
  for (unsigned M : M_values) {
    for (unsigned n = 0; n <= n_max; ++n) {
      reports.push_back(moment_numeric(M, n, rel_tol));
    }
    for (unsigned n = 0; n <= std::min(n_max, 10u); ++n) {
      double expected = brown_tutte(M, n).get_d();
      double computed = moment_continuation(M, n + 1.0);
      double rel_error = std::abs(computed - expected) / std::abs(expected);
      reports.push_back({"continuation", static_cast<int>(M), static_cast<double>(n), expected,
                         computed, rel_error, rel_error <= 1e-11, 1e-11});
    }
    for (double z : z_list) {
      double tol = (z < 1.1 * kRadius) ? 1e-6 : rel_tol;
      double expected = stieltjes_lhs(M, z);
      auto rhs = stieltjes_rhs(M, z, tol * 0.1);
      double rel_error = std::abs(rhs.value - expected) / std::abs(expected);
      reports.push_back({"stieltjes", static_cast<int>(M), z, expected, rhs.value, rel_error,
                         rhs.converged && rel_error <= tol, tol});
    }
    {
      auto cert = convolution_certificate(M);
      auto scan = sign_scan(M, 1024);
      bool scan_positive = scan.negative_intervals.empty();
      reports.push_back({"positivity", static_cast<int>(M), 0.0, cert.certified ? 1.0 : 0.0,
                         scan_positive ? 1.0 : 0.0, 0.0, cert.certified == scan_positive, 0.0});
    }
  }
  std::sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    return std::tie(a.name, a.M, a.parameter) < std::tie(b.name, b.M, b.parameter);
  });
  return reports;
}

}  // namespace btmp
