#include <doctest.h>

#include <cmath>

#include "btmp/exact.hpp"
#include "btmp/meijer.hpp"

using namespace btmp;

namespace {

constexpr double kPi = 3.141592653589793238;

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// Coefficient of x^rho in the normalized expansion. HypTerm coefficients
// multiply (x/R)^exponent, so converting to plain x^rho divides by R^rho.
double x_coefficient(const HypTerm& t, unsigned M) {
  double rho = t.exponent.get_d();
  double r = 256.0 / 27.0;
  return t.coefficient * std::pow(r, -rho) / brown_tutte(M, 0).get_d();
}

}  // namespace

TEST_CASE("delta lists") {
  auto d = delta_list(4, q(-2));
  REQUIRE(d.values.size() == 4);
  CHECK(d.values[0] == q(-1, 2));
  CHECK(d.values[1] == q(-1, 4));
  CHECK(d.values[2] == q(0));
  CHECK(d.values[3] == q(1, 4));

  auto e = delta_list(3, q(7));
  CHECK(e.values[0] == q(7, 3));
  CHECK(e.values[1] == q(8, 3));
  CHECK(e.values[2] == q(3));

  CHECK_THROWS_AS(delta_list(0, q(1)), std::invalid_argument);
}

TEST_CASE("weight spec shape") {
  for (unsigned M = 0; M <= 20; ++M) {
    auto s = weight_spec(M);
    CAPTURE(M);
    CHECK(s.m == 4);
    CHECK(s.n == 0);
    CHECK(s.p == 4);
    CHECK(s.q == 4);
    REQUIRE(s.alpha.size() == 4);
    REQUIRE(s.beta.size() == 4);
    CHECK(s.alpha[0] == 0);
    CHECK(s.alpha[1] == q(2 * M + 1, 3));
    CHECK(s.alpha[3] == q(2 * M + 3, 3));
    CHECK(s.beta[0] == q(2 * static_cast<long>(M) - 2, 4));
    CHECK(s.beta[2] == q(M, 2));
    CHECK(s.arg_scale == q(27, 256));
    CHECK(s.arg_sign == 1);
    CHECK(s.c_star() == 0);
    // smallest beta governs the x -> 0 exponent
    Rational min_beta = s.beta[0];
    for (const auto& b : s.beta) min_beta = std::min(min_beta, b);
    CHECK(min_beta == q(M, 2) - q(1, 2));
  }
}

TEST_CASE("ogf spec and reshuffle round trip") {
  for (unsigned M = 0; M <= 20; ++M) {
    auto g = ogf_spec(M);
    CAPTURE(M);
    CHECK(g.m == 4);
    CHECK(g.n == 1);
    CHECK(g.alpha[0] == 0);
    CHECK(g.arg_sign == -1);
    CHECK(g.prefactor < 0.0);

    auto w = reshuffle_ogf_to_weight(g);
    auto ref = weight_spec(M);
    CHECK(w.m == ref.m);
    CHECK(w.n == ref.n);
    CHECK(w.alpha == ref.alpha);
    CHECK(w.beta == ref.beta);
    CHECK(w.arg_sign == ref.arg_sign);
    CHECK(w.arg_scale == ref.arg_scale);
    CHECK(w.prefactor == doctest::Approx(ref.prefactor).epsilon(1e-14));
  }
}

TEST_CASE("reshuffle rejects malformed input") {
  auto s = weight_spec(0);  // n = 0, nothing to move
  CHECK_THROWS_AS(reshuffle_ogf_to_weight(s), std::invalid_argument);

  auto g = ogf_spec(1);
  g.alpha[0] = q(1, 7);
  CHECK_THROWS_AS(reshuffle_ogf_to_weight(g), std::invalid_argument);
}

TEST_CASE("prefactor ratio is exactly the support radius") {
  CHECK(ratio_rg_rw() == q(256, 27));
  CHECK(ratio_rg_rw() == support_radius());
  for (unsigned M = 0; M <= 8; ++M) {
    CHECK(prefactor_rg(M) / prefactor_rw(M) ==
          doctest::Approx(256.0 / 27.0).epsilon(1e-13));
  }
}

TEST_CASE("leading scalar prefactor value") {
  // r_W(0) = 6 sqrt(6) / (192 sqrt(pi))
  double expected = 6.0 * std::sqrt(6.0) / (192.0 * std::sqrt(kPi));
  CHECK(prefactor_rw(0) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("slater decomposition, smallest case") {
  auto rep = slater_decompose(weight_spec(0));
  REQUIRE(rep.terms.size() == 3);
  REQUIRE(rep.dropped_exponents.size() == 1);
  CHECK(rep.dropped_exponents[0] == q(0));  // integer beta hits a gamma pole

  const auto& t0 = rep.terms[0];
  CHECK(t0.exponent == q(-1, 2));
  CHECK(t0.num_params == std::vector<Rational>{q(-1, 2), q(-1, 6), q(1, 6)});
  CHECK(t0.den_params == std::vector<Rational>{q(1, 4), q(3, 4)});
  CHECK(x_coefficient(t0, 0) == doctest::Approx(2.0 / kPi).epsilon(1e-12));

  const auto& t1 = rep.terms[1];
  CHECK(t1.exponent == q(-1, 4));
  CHECK(t1.num_params == std::vector<Rational>{q(-1, 4), q(1, 12), q(5, 12)});
  CHECK(t1.den_params == std::vector<Rational>{q(1, 2), q(5, 4)});
  CHECK(x_coefficient(t1, 0) ==
        doctest::Approx(-std::sqrt(2.0) / kPi).epsilon(1e-12));

  const auto& t2 = rep.terms[2];
  CHECK(t2.exponent == q(1, 4));
  CHECK(t2.num_params == std::vector<Rational>{q(1, 4), q(7, 12), q(11, 12)});
  CHECK(t2.den_params == std::vector<Rational>{q(3, 2), q(7, 4)});
  CHECK(x_coefficient(t2, 0) ==
        doctest::Approx(std::sqrt(2.0) / (32.0 * kPi)).epsilon(1e-12));
}

TEST_CASE("slater decomposition, second row") {
  auto rep = slater_decompose(weight_spec(1));
  REQUIRE(rep.terms.size() == 3);
  CHECK(rep.dropped_exponents == std::vector<Rational>{q(0)});

  CHECK(rep.terms[0].exponent == q(1, 4));
  CHECK(rep.terms[0].num_params ==
        std::vector<Rational>{q(-5, 12), q(-1, 12), q(1, 4)});
  CHECK(rep.terms[0].den_params == std::vector<Rational>{q(1, 2), q(3, 4)});
  CHECK(x_coefficient(rep.terms[0], 1) ==
        doctest::Approx(2.0 * std::sqrt(2.0) / kPi).epsilon(1e-12));

  CHECK(rep.terms[1].exponent == q(1, 2));
  CHECK(x_coefficient(rep.terms[1], 1) ==
        doctest::Approx(-2.5 / kPi).epsilon(1e-12));

  CHECK(rep.terms[2].exponent == q(3, 4));
  CHECK(rep.terms[2].num_params ==
        std::vector<Rational>{q(1, 12), q(5, 12), q(3, 4)});
  CHECK(rep.terms[2].den_params == std::vector<Rational>{q(5, 4), q(3, 2)});
  CHECK(x_coefficient(rep.terms[2], 1) ==
        doctest::Approx(5.0 * std::sqrt(2.0) / (16.0 * kPi)).epsilon(1e-12));
}

TEST_CASE("slater decomposition, first non-certifiable row") {
  auto rep = slater_decompose(weight_spec(2));
  REQUIRE(rep.terms.size() == 3);
  CHECK(rep.dropped_exponents == std::vector<Rational>{q(1)});

  const auto& t0 = rep.terms[0];
  CHECK(t0.exponent == q(1, 2));
  // no cancellation here: a full 4F3
  CHECK(t0.num_params ==
        std::vector<Rational>{q(-5, 6), q(-1, 2), q(-1, 6), q(3, 2)});
  CHECK(t0.den_params == std::vector<Rational>{q(1, 4), q(1, 2), q(3, 4)});
  CHECK(x_coefficient(t0, 2) ==
        doctest::Approx(-14.0 / (5.0 * kPi)).epsilon(1e-12));

  CHECK(x_coefficient(rep.terms[1], 2) ==
        doctest::Approx(3.0 * std::sqrt(2.0) / kPi).epsilon(1e-12));
  CHECK(x_coefficient(rep.terms[2], 2) ==
        doctest::Approx(-35.0 * std::sqrt(2.0) / (32.0 * kPi)).epsilon(1e-12));
}

TEST_CASE("slater decomposition, third row") {
  auto rep = slater_decompose(weight_spec(3));
  REQUIRE(rep.terms.size() == 3);
  CHECK(rep.terms[0].exponent == q(5, 4));
  CHECK(x_coefficient(rep.terms[0], 3) ==
        doctest::Approx(-4.0 * std::sqrt(2.0) / kPi).epsilon(1e-12));
  CHECK(rep.terms[1].exponent == q(3, 2));
  CHECK(x_coefficient(rep.terms[1], 3) ==
        doctest::Approx(9.0 / kPi).epsilon(1e-12));
  CHECK(rep.terms[2].exponent == q(7, 4));
  CHECK(x_coefficient(rep.terms[2], 3) ==
        doctest::Approx(-21.0 * std::sqrt(2.0) / (8.0 * kPi)).epsilon(1e-12));
}

TEST_CASE("slater term count stays at three") {
  // one integer beta per row is always killed by the gamma-pole rule
  for (unsigned M = 0; M <= 10; ++M) {
    auto rep = slater_decompose(weight_spec(M));
    CAPTURE(M);
    CHECK(rep.terms.size() == 3);
    CHECK(rep.dropped_exponents.size() == 1);
    // the integer element of the beta list, floor(M/2)
    CHECK(rep.dropped_exponents[0] == q(static_cast<long>(M / 2)));
    for (size_t i = 1; i < rep.terms.size(); ++i) {
      CHECK(rep.terms[i - 1].exponent < rep.terms[i].exponent);
    }
  }
}

TEST_CASE("slater rejects unsupported specs") {
  auto s = weight_spec(0);
  s.n = 1;
  CHECK_THROWS_AS(slater_decompose(s), std::invalid_argument);

  auto r = weight_spec(0);
  r.beta = {q(0), q(1), q(1, 2), q(3, 2)};  // beta repeated modulo 1
  CHECK_THROWS_AS(slater_decompose(r), std::invalid_argument);
}
