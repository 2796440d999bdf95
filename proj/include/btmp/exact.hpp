#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

// Exact arbitrary-precision arithmetic for the Brown-Tutte numbers A(M,n)
// and the rational constants derived from them. Everything here is integer
// or rational; no floating point enters until the caller asks for it.

namespace btmp {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

/// n! as an exact integer.
ExactInt factorial(unsigned long n);

/// Brown-Tutte number A(M,n) = 2(2M+3)!/((M+2)!M!) * (4n+2M+1)!/(n!(3n+2M+3)!).
/// The final division is exact; a failed divisibility check throws
/// std::logic_error since it would signal an arithmetic bug.
ExactInt brown_tutte(unsigned long M, unsigned long n);

/// Catalan number binom(2n,n)/(n+1).
ExactInt catalan(unsigned long n);

/// P(M) = 2(2M+3)!/((M+2)!M!); integer-valued, returned as a canonical rational.
ExactRational prefactor_P(unsigned long M);

/// Support radius R = 4^4/3^3 = 256/27 of the moment problem.
ExactRational support_radius();

/// Normalized moment A(M,n)/A(M,0) in canonical form.
ExactRational moment_tilde(unsigned long M, unsigned long n);

inline double to_double(const ExactRational& q) { return q.get_d(); }
inline double to_double(const ExactInt& z) { return z.get_d(); }

}  // namespace btmp
