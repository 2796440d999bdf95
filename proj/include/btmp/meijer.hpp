#pragma once

#include <gmpxx.h>

#include <vector>

// Meijer G parameter lists for the weight W_M and the ogf transform
// (1/z)G(M,1/z), the Slater decomposition into hypergeometric terms, the
// bracket-reshuffling map between the two specs, and the scalar prefactors
// r_W, r_G.

namespace btmp {

using Rational = mpq_class;

/// The arithmetic list Delta(k,a) = a/k, (a+1)/k, ..., (a+k-1)/k.
struct DeltaList {
  unsigned k;
  Rational a;
  std::vector<Rational> values;
};

DeltaList delta_list(unsigned k, const Rational& a);

/// Parameter data of a G^{m,n}_{p,q}. By convention alpha[0..n) is the
/// "n-bracket" and beta[0..m) the "m-bracket". The function argument is
/// arg_sign * arg_scale * t for the caller's variable t.
struct MeijerGSpec {
  int m = 0, n = 0, p = 0, q = 0;
  std::vector<Rational> alpha;
  std::vector<Rational> beta;
  double prefactor = 1.0;
  Rational arg_scale = 1;
  int arg_sign = +1;

  int c_star() const { return m + n - (p + q) / 2; }
};

/// W_M(x) = r_W(M) G^{4,0}_{4,4}(x/R | 0, Delta(3,2M+1) ; Delta(4,2M-2)).
MeijerGSpec weight_spec(unsigned M);

/// (1/z) G(M, 1/z) = -r_G(M)/R * G^{4,1}_{4,4}(-z/R | 0; L1 ; L2).
MeijerGSpec ogf_spec(unsigned M);

/// Moves the 0 from the n-bracket of the ogf spec into the alpha tail,
/// yielding the weight spec (argument flips to +x/R, prefactor to r_W).
/// Throws std::invalid_argument on malformed input.
MeijerGSpec reshuffle_ogf_to_weight(const MeijerGSpec& spec);

/// One term c * (x/R)^exponent * pFq(num; den; x/R).
struct HypTerm {
  double coefficient;
  Rational exponent;
  std::vector<Rational> num_params;
  std::vector<Rational> den_params;
};

struct WeightRepresentation {
  unsigned M;
  std::vector<HypTerm> terms;         // ascending exponent
  bool normalized;                    // divided by A(M,0)
  std::vector<Rational> dropped_exponents;  // candidates removed by the Gamma-pole rule
};

/// Generic Slater decomposition of a G^{4,0}_{4,4} spec. A candidate term at
/// beta_k is dropped when some Gamma(alpha_j - beta_k) sits at a pole (its
/// coefficient is exactly 0); equal numerator/denominator parameters are
/// cancelled pairwise. Throws std::invalid_argument for specs outside this
/// family (repeated beta modulo 1).
WeightRepresentation slater_decompose(const MeijerGSpec& spec);

/// r_W(M) = 3^(1/2-2M) 2^(4M+1/2) / (192 sqrt(pi)) * P(M).
double prefactor_rw(unsigned M);

/// r_G(M) = 4/(81 sqrt(pi)) * 3^(1/2-2M) 2^(4M+1/2) * P(M).
double prefactor_rg(unsigned M);

/// r_G(M)/r_W(M) computed symbolically: the pi and power factors cancel,
/// leaving 4*192/81 = 256/27.
Rational ratio_rg_rw();

}  // namespace btmp
