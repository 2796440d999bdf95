#include "btmp/weight.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "btmp/exact.hpp"
#include "btmp/special.hpp"

namespace btmp {

namespace {

constexpr double kRadius = 256.0 / 27.0;
constexpr double kScanEps = 1e-6;

}  // namespace

const WeightRepresentation& weight_representation(unsigned M) {
  static std::map<unsigned, WeightRepresentation> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(M);
  if (it == cache.end()) {
    it = cache.emplace(M, slater_decompose(weight_spec(M))).first;
  }
  return it->second;
}

double weight(unsigned M, double x) {
  if (!(x > 0.0 && x < kRadius)) {
    throw std::domain_error("weight: x must lie strictly inside (0, R)");
  }
  const auto& rep = weight_representation(M);
  const double t = x / kRadius;
  double sum = 0.0;
  for (const auto& term : rep.terms) {
    HypSeriesParams params{term.num_params, term.den_params, t, 1e-12};
    double f = hyp_pfq(params).value;
    sum += term.coefficient * std::pow(t, term.exponent.get_d()) * f;
  }
  return sum;
}

double weight_tilde(unsigned M, double x) {
  return weight(M, x) / brown_tutte(M, 0).get_d();
}

std::vector<Rational> leading_exponents(unsigned M) {
  std::vector<Rational> exps;
  for (const auto& term : weight_representation(M).terms) exps.push_back(term.exponent);
  return exps;
}

SignChangeReport sign_scan(unsigned M, int grid_size) {
  if (grid_size < 16) throw std::invalid_argument("sign_scan: grid_size must be >= 16");
  const double lo = kScanEps * kRadius;
  const double hi = (1.0 - kScanEps) * kRadius;
  const double step = (hi - lo) / (grid_size - 1);

  std::vector<double> values(grid_size);
  for (int i = 0; i < grid_size; ++i) values[i] = weight(M, lo + i * step);

  SignChangeReport report{M, {}, {}, grid_size};
  for (int i = 0; i + 1 < grid_size; ++i) {
    double a = lo + i * step, b = a + step;
    double fa = values[i], fb = values[i + 1];
    if ((fa < 0.0) == (fb < 0.0)) continue;
    while (b - a > 1e-10 * kRadius) {
      double mid = 0.5 * (a + b);
      double fm = weight(M, mid);
      if ((fm < 0.0) == (fa < 0.0)) {
        a = mid;
        fa = fm;
      } else {
        b = mid;
        fb = fm;
      }
    }
    report.roots.push_back(0.5 * (a + b));
  }

  // Negative stretches, bounded by refined roots or by the scan window.
  double start = lo;
  bool negative = values.front() < 0.0;
  for (double root : report.roots) {
    if (negative) report.negative_intervals.emplace_back(start, root);
    start = root;
    negative = !negative;
  }
  if (negative) report.negative_intervals.emplace_back(start, hi);
  return report;
}

}  // namespace btmp
