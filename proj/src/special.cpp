#include "btmp/special.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "btmp/dd.hpp"

namespace btmp {

namespace {

constexpr long kMaxTerms = 1000000;
constexpr double kCancellationRatio = 1e6;

bool is_nonpositive_integer(const mpq_class& q) {
  return q.get_den() == 1 && q.get_num() <= 0;
}

inline double as_double(double x) { return x; }
inline double as_double(const DD& x) { return x.value(); }

}  // namespace

double SignedLogGamma::value() const { return sign * std::exp(log_abs); }

SignedLogGamma log_gamma_signed(double x) {
  if (x <= 0.5 && std::abs(x - std::nearbyint(x)) <= 1e-12 && std::nearbyint(x) <= 0.0) {
    throw PoleError("log_gamma_signed: pole at x = " + std::to_string(x));
  }
  if (x > 0.0) {
    return {std::lgamma(x), +1};
  }
  // lgamma returns log|Gamma|; the sign alternates between integer poles.
  int sign = (static_cast<long long>(std::floor(x)) % 2 == 0) ? +1 : -1;
  return {std::lgamma(x), sign};
}

double pochhammer(const mpq_class& a, unsigned k) {
  if (a.get_den() == 1 && a.get_num() <= 0) {
    mpz_class mag = -a.get_num();
    if (mpz_class(k) > mag) return 0.0;
  }
  double ad = a.get_d();
  double prod = 1.0;
  for (unsigned i = 0; i < k; ++i) prod *= ad + static_cast<double>(i);
  return prod;
}

namespace {

// Integral J(sigma, u) = int_0^inf (1+v)^(-sigma) e^(-u v) dv, used to
// estimate the algebraic tail sum_{k>K} k^(-sigma) z^k left behind by the
// stop rule when z -> 1 (terms of a p = q+1 series decay like k^(-sigma)
// with sigma = 1 + sum(den) - sum(num)).
double tail_integral(double sigma, double u) {
  if (u > 50.0) {
    // watson-lemma expansion, plenty for a correction term
    double s = sigma;
    return (1.0 - s / u * (1.0 - (s + 1.0) / u * (1.0 - (s + 2.0) / u))) / u;
  }
  // substitute v = (1-y^2)/y^2; integrand is smooth on (0,1]
  const int n = 512;
  const double h = 1.0 / n;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    double y0 = i * h, y2 = (i + 1) * h, ym = y0 + 0.5 * h;
    auto g = [&](double y) {
      if (y <= 0.0) return 0.0;
      return 2.0 * std::pow(y, 2.0 * sigma - 3.0) * std::exp(-u * (1.0 - y * y) / (y * y));
    };
    acc += (g(y0) + 4.0 * g(ym) + g(y2)) * h / 6.0;
  }
  return acc;
}

// Estimated remainder past the last summed term (index k, value t_k) for a
// series with positive argument z and algebraic decay exponent sigma.
double series_tail(double t_k, long k, double z, double sigma) {
  if (!(z > 0.0) || z > 1.0 || t_k == 0.0) return 0.0;
  if (z < 0.5 || sigma <= 1.0) {
    return t_k * z / (1.0 - z);  // geometric regime
  }
  double u = -std::log(z) * static_cast<double>(k);
  return t_k * (static_cast<double>(k) * tail_integral(sigma, u) - 0.5);
}

// One pass of the series in precision T (double or DD). Returns the sum and
// reports the largest partial-sum magnitude and the stopping term index.
template <typename T>
struct SeriesPass {
  T sum;
  double max_partial;
  long terms;
  double achieved_tol;
};

template <typename T>
SeriesPass<T> sum_series(const std::vector<double>& num, const std::vector<double>& den,
                         double z, double rel_tol, double decay_sigma) {
  T sum(1.0);
  T term(1.0);
  double comp = 0.0;  // Neumaier compensation, double pass only
  double max_partial = 1.0;
  int small_streak = 0;
  long k = 0;
  double tol_seen = 0.0;
  while (k < kMaxTerms) {
    T ratio(z / static_cast<double>(k + 1));
    for (double a : num) ratio = ratio * T(a + static_cast<double>(k));
    for (double b : den) ratio = ratio / T(b + static_cast<double>(k));
    term = term * ratio;
    double td = std::abs(as_double(term));
    if constexpr (std::is_same_v<T, double>) {
      // error-free transformation accumulation
      double t = sum + term;
      if (std::abs(sum) >= std::abs(term)) {
        comp += (sum - t) + term;
      } else {
        comp += (term - t) + sum;
      }
      sum = t;
    } else {
      sum = sum + term;
    }
    ++k;
    double sd = std::abs(as_double(sum));
    max_partial = std::max(max_partial, sd);
    if (td == 0.0) {  // terminating series (nonpositive-integer numerator param)
      tol_seen = 0.0;
      break;
    }
    double rel = sd > 0.0 ? td / sd : std::numeric_limits<double>::infinity();
    if (rel <= rel_tol) {
      tol_seen = std::max(tol_seen, rel);
      if (++small_streak >= 3) break;
    } else {
      small_streak = 0;
      tol_seen = 0.0;
    }
  }
  if (k >= kMaxTerms) {
    throw NoConvergenceError("hyp_pfq: series did not converge within 1e6 terms");
  }
  if constexpr (std::is_same_v<T, double>) {
    sum += comp;
  }
  if (!std::isnan(decay_sigma)) {
    double tail = series_tail(as_double(term), k, z, decay_sigma);
    sum = sum + T(tail);
    double sd = std::abs(as_double(sum));
    if (sd > 0.0) tol_seen = std::max(tol_seen, 0.01 * std::abs(tail) / sd);
  }
  return {sum, max_partial, k, tol_seen};
}

}  // namespace

HypResult hyp_pfq(const HypSeriesParams& params) {
  const auto p = params.numerator_params.size();
  const auto q = params.denominator_params.size();
  for (const auto& b : params.denominator_params) {
    if (is_nonpositive_integer(b)) {
      throw std::invalid_argument("hyp_pfq: nonpositive-integer denominator parameter");
    }
  }
  const double z = params.argument;
  if (z == 0.0) return {1.0, 0.0, 0, false};
  if (p > q + 1) {
    throw DivergenceError("hyp_pfq: p > q+1 with nonzero argument");
  }
  if (p == q + 1) {
    if (std::abs(z) > 1.0) {
      throw DivergenceError("hyp_pfq: |argument| > 1 with p = q+1");
    }
    if (std::abs(z) == 1.0) {
      mpq_class excess = 0;
      for (const auto& b : params.denominator_params) excess += b;
      for (const auto& a : params.numerator_params) excess -= a;
      if (excess <= 0) {
        throw DivergenceError("hyp_pfq: |argument| = 1 requires sum(den) - sum(num) > 0");
      }
    }
  }

  std::vector<double> num(p), den(q);
  for (size_t i = 0; i < p; ++i) num[i] = params.numerator_params[i].get_d();
  for (size_t j = 0; j < q; ++j) den[j] = params.denominator_params[j].get_d();

  double decay_sigma = std::numeric_limits<double>::quiet_NaN();
  if (p == q + 1 && z > 0.0) {
    double excess = 0.0;
    for (double b : den) excess += b;
    for (double a : num) excess -= a;
    decay_sigma = 1.0 + excess;
  }
  auto pass = sum_series<double>(num, den, z, params.rel_tol, decay_sigma);
  if (std::abs(pass.sum) > 0.0 && pass.max_partial <= kCancellationRatio * std::abs(pass.sum)) {
    return {pass.sum, pass.achieved_tol, pass.terms, false};
  }
  auto ddpass = sum_series<DD>(num, den, z, params.rel_tol, decay_sigma);
  return {ddpass.sum.value(), ddpass.achieved_tol, ddpass.terms, true};
}

}  // namespace btmp
