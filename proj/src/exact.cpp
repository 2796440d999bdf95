#include "btmp/exact.hpp"

namespace btmp {

ExactInt factorial(unsigned long n) {
  ExactInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

ExactInt brown_tutte(unsigned long M, unsigned long n) {
  ExactInt num = 2 * factorial(2 * M + 3) * factorial(4 * n + 2 * M + 1);
  ExactInt den = factorial(M + 2) * factorial(M) * factorial(n) * factorial(3 * n + 2 * M + 3);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::logic_error("brown_tutte: inexact division at M=" + std::to_string(M) +
                           " n=" + std::to_string(n));
  }
  ExactInt r;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

ExactInt catalan(unsigned long n) {
  ExactInt b;
  mpz_bin_uiui(b.get_mpz_t(), 2 * n, n);
  ExactInt r;
  ExactInt d(n + 1);
  mpz_divexact(r.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t());
  return r;
}

ExactRational prefactor_P(unsigned long M) {
  ExactRational r(2 * factorial(2 * M + 3), factorial(M + 2) * factorial(M));
  r.canonicalize();
  return r;
}

ExactRational support_radius() { return ExactRational(256, 27); }

ExactRational moment_tilde(unsigned long M, unsigned long n) {
  ExactRational r(brown_tutte(M, n), brown_tutte(M, 0));
  r.canonicalize();
  return r;
}

}  // namespace btmp
