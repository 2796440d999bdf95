#pragma once

#include <cmath>

// Minimal double-double arithmetic (Dekker/Knuth error-free transformations).
// Used as the extended-precision fallback of the hypergeometric series when
// cancellation is detected; roughly 32 significant digits.

namespace btmp {

struct DD {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DD() = default;
  constexpr DD(double h) : hi(h), lo(0.0) {}
  constexpr DD(double h, double l) : hi(h), lo(l) {}

  double value() const { return hi + lo; }
};

namespace dd_detail {
inline DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}
inline DD two_prod(double a, double b) {
  double p = a * b;
  double err = std::fma(a, b, -p);
  return {p, err};
}
inline DD renorm(double hi, double lo) {
  double s = hi + lo;
  double e = lo - (s - hi);
  return {s, e};
}
}  // namespace dd_detail

inline DD operator+(const DD& a, const DD& b) {
  DD s = dd_detail::two_sum(a.hi, b.hi);
  double lo = s.lo + a.lo + b.lo;
  return dd_detail::renorm(s.hi, lo);
}

inline DD operator-(const DD& a) { return {-a.hi, -a.lo}; }
inline DD operator-(const DD& a, const DD& b) { return a + (-b); }

inline DD operator*(const DD& a, const DD& b) {
  DD p = dd_detail::two_prod(a.hi, b.hi);
  double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
  return dd_detail::renorm(p.hi, lo);
}

inline DD operator/(const DD& a, const DD& b) {
  double q1 = a.hi / b.hi;
  DD r = a - b * DD(q1);
  double q2 = r.hi / b.hi;
  r = r - b * DD(q2);
  double q3 = r.hi / b.hi;
  return dd_detail::renorm(q1, q2 + q3);
}

inline DD abs(const DD& a) { return a.hi < 0.0 ? -a : a; }

}  // namespace btmp
