#include "btmp/meijer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "btmp/exact.hpp"
#include "btmp/special.hpp"

namespace btmp {

namespace {

bool is_nonpositive_integer(const Rational& q) {
  return q.get_den() == 1 && q.get_num() <= 0;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational inv_radius() { return Rational(27, 256); }

}  // namespace

DeltaList delta_list(unsigned k, const Rational& a) {
  if (k == 0) throw std::invalid_argument("delta_list: k must be positive");
  DeltaList d{k, a, {}};
  d.values.reserve(k);
  for (unsigned i = 0; i < k; ++i) {
    Rational v = (a + static_cast<long>(i)) / static_cast<long>(k);
    v.canonicalize();
    d.values.push_back(v);
  }
  return d;
}

MeijerGSpec weight_spec(unsigned M) {
  MeijerGSpec s;
  s.m = 4;
  s.n = 0;
  s.p = s.q = 4;
  s.alpha.push_back(0);
  for (auto& v : delta_list(3, 2 * static_cast<long>(M) + 1).values) s.alpha.push_back(v);
  s.beta = delta_list(4, 2 * static_cast<long>(M) - 2).values;
  s.prefactor = prefactor_rw(M);
  s.arg_scale = inv_radius();
  s.arg_sign = +1;
  return s;
}

MeijerGSpec ogf_spec(unsigned M) {
  MeijerGSpec s;
  s.m = 4;
  s.n = 1;
  s.p = s.q = 4;
  s.alpha.push_back(0);  // n-bracket
  for (auto& v : delta_list(3, 2 * static_cast<long>(M) + 1).values) s.alpha.push_back(v);
  s.beta = delta_list(4, 2 * static_cast<long>(M) - 2).values;
  s.prefactor = -prefactor_rg(M) * 27.0 / 256.0;
  s.arg_scale = inv_radius();
  s.arg_sign = -1;
  return s;
}

MeijerGSpec reshuffle_ogf_to_weight(const MeijerGSpec& spec) {
  if (spec.m != 4 || spec.n != 1 || spec.p != 4 || spec.q != 4 || spec.alpha.size() != 4 ||
      spec.alpha[0] != 0) {
    throw std::invalid_argument("reshuffle_ogf_to_weight: expected G^{4,1}_{4,4} with 0 in the n-bracket");
  }
  // Recover M from beta[2] = M/2.
  Rational twoM = 2 * spec.beta[2];
  if (!is_integer(twoM) || twoM < 0) {
    throw std::invalid_argument("reshuffle_ogf_to_weight: beta list is not of the weight family");
  }
  unsigned M = static_cast<unsigned>(twoM.get_num().get_ui());
  MeijerGSpec out = spec;
  out.n = 0;  // 0 stays at the head of alpha, now in the p-n tail
  out.arg_sign = +1;
  out.prefactor = prefactor_rw(M);
  return out;
}

WeightRepresentation slater_decompose(const MeijerGSpec& spec) {
  if (spec.m != 4 || spec.n != 0 || spec.p != 4 || spec.q != 4) {
    throw std::invalid_argument("slater_decompose: expected a G^{4,0}_{4,4} spec");
  }
  for (size_t j = 0; j < 4; ++j) {
    for (size_t k = j + 1; k < 4; ++k) {
      if (is_integer(spec.beta[j] - spec.beta[k])) {
        throw std::invalid_argument("slater_decompose: repeated beta modulo 1 is unsupported");
      }
    }
  }

  Rational twoM = 2 * spec.beta[2];
  unsigned M = static_cast<unsigned>(twoM.get_num().get_ui());

  WeightRepresentation rep{M, {}, false, {}};
  for (size_t k = 0; k < 4; ++k) {
    const Rational& bk = spec.beta[k];
    bool dropped = false;
    for (size_t j = 0; j < 4; ++j) {
      if (is_nonpositive_integer(spec.alpha[j] - bk)) {
        dropped = true;  // Gamma(alpha_j - beta_k) pole: coefficient is exactly 0
        break;
      }
    }
    if (dropped) {
      rep.dropped_exponents.push_back(bk);
      continue;
    }
    double log_c = 0.0;
    int sign = 1;
    for (size_t j = 0; j < 4; ++j) {
      if (j == k) continue;
      auto g = log_gamma_signed(Rational(spec.beta[j] - bk).get_d());
      log_c += g.log_abs;
      sign *= g.sign;
    }
    for (size_t j = 0; j < 4; ++j) {
      auto g = log_gamma_signed(Rational(spec.alpha[j] - bk).get_d());
      log_c -= g.log_abs;
      sign *= g.sign;
    }
    HypTerm term;
    term.coefficient = spec.prefactor * sign * std::exp(log_c);
    term.exponent = bk;
    for (size_t j = 0; j < 4; ++j) {
      Rational v = 1 + bk - spec.alpha[j];
      v.canonicalize();
      term.num_params.push_back(v);
    }
    for (size_t j = 0; j < 4; ++j) {
      if (j == k) continue;
      Rational v = 1 + bk - spec.beta[j];
      v.canonicalize();
      term.den_params.push_back(v);
    }
    // Cancel parameters shared between the two lists (4F3 -> 3F2 etc.).
    for (auto it = term.num_params.begin(); it != term.num_params.end();) {
      auto match = std::find(term.den_params.begin(), term.den_params.end(), *it);
      if (match != term.den_params.end()) {
        term.den_params.erase(match);
        it = term.num_params.erase(it);
      } else {
        ++it;
      }
    }
    std::sort(term.num_params.begin(), term.num_params.end());
    std::sort(term.den_params.begin(), term.den_params.end());
    rep.terms.push_back(std::move(term));
  }
  std::sort(rep.terms.begin(), rep.terms.end(),
            [](const HypTerm& a, const HypTerm& b) { return a.exponent < b.exponent; });
  std::sort(rep.dropped_exponents.begin(), rep.dropped_exponents.end());
  return rep;
}

double prefactor_rw(unsigned M) {
  double log_p = std::log(prefactor_P(M).get_d());
  double lg = (0.5 - 2.0 * M) * std::log(3.0) + (4.0 * M + 0.5) * std::log(2.0) -
              std::log(192.0) - 0.5 * std::log(M_PI) + log_p;
  return std::exp(lg);
}

double prefactor_rg(unsigned M) {
  double log_p = std::log(prefactor_P(M).get_d());
  double lg = std::log(4.0) - std::log(81.0) + (0.5 - 2.0 * M) * std::log(3.0) +
              (4.0 * M + 0.5) * std::log(2.0) - 0.5 * std::log(M_PI) + log_p;
  return std::exp(lg);
}

Rational ratio_rg_rw() {
  // (4/81) / (1/192): every pi and power-of-two/three factor cancels.
  Rational r(4 * 192, 81);
  r.canonicalize();
  return r;
}

}  // namespace btmp
