#include <doctest.h>

#include <cmath>
#include <limits>
#include <tuple>

#include "btmp/exact.hpp"
#include "btmp/quadrature.hpp"
#include "btmp/special.hpp"
#include "btmp/weight.hpp"

using namespace btmp;

namespace {
constexpr double kR = 256.0 / 27.0;
}

TEST_CASE("plain integrals") {
  auto one = integrate_de([](double) { return 1.0; }, 0.0, 1.0, 1e-12);
  CHECK(one.converged);
  CHECK(one.value == doctest::Approx(1.0).epsilon(1e-13));

  auto cube = integrate_de([](double x) { return x * x * x; }, -1.0, 2.0, 1e-12);
  CHECK(cube.value == doctest::Approx(3.75).epsilon(1e-12));
}

TEST_CASE("endpoint singularities") {
  // int_0^1 x^{-1/2} dx = 2 despite the blow-up at 0
  auto r = integrate_de([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-12);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));

  // int_0^1 1/sqrt(x(1-x)) dx = pi, folded about x = 1/2 so the singular
  // point coincides with an exact interval endpoint
  auto s = integrate_de([](double x) { return 2.0 / std::sqrt(x * (1.0 - x)); },
                        0.0, 0.5, 1e-12);
  CHECK(s.converged);
  CHECK(s.value == doctest::Approx(3.14159265358979324).epsilon(1e-12));
}

TEST_CASE("invalid interval and NaN propagation") {
  CHECK_THROWS_AS(integrate_de([](double) { return 1.0; }, 1.0, 1.0, 1e-10),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate_de([](double) { return std::nan(""); }, 0.0, 1.0, 1e-10),
                  std::runtime_error);
}

TEST_CASE("normalized weights integrate to one") {
  for (unsigned M = 0; M <= 4; ++M) {
    auto r = integrate_de([M](double x) { return weight_tilde(M, x); }, 0.0, kR, 1e-11);
    CAPTURE(M);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("quadrature moments match the exact integers") {
  auto r = moment_numeric(1, 3, 1e-8);
  CHECK(r.passed);
  CHECK(r.expected == 100.0);
  CHECK(r.rel_error <= 1e-8);
  CHECK(r.name == "moment");
}

TEST_CASE("continued moments interpolate the sequence") {
  for (unsigned M = 0; M <= 4; ++M) {
    for (unsigned n = 0; n <= 10; ++n) {
      double expected = brown_tutte(M, n).get_d();
      CAPTURE(M);
      CAPTURE(n);
      CHECK(moment_continuation(M, n + 1.0) ==
            doctest::Approx(expected).epsilon(1e-11));
    }
  }
}

TEST_CASE("continued moment edge behavior") {
  // s = 1/2 at M = 0 sits on a numerator gamma pole: the analytic value is
  // +infinity, matching the log-divergent integral of x^{-1/2} W_0.
  CHECK(std::isinf(moment_continuation(0, 0.5)));
  // below the convergence bound the call is rejected
  CHECK_THROWS_AS(moment_continuation(0, 0.2), std::domain_error);
  CHECK_THROWS_AS(moment_continuation(2, -0.8), std::domain_error);
  // half-integer interior point agrees with direct quadrature
  double s = 1.5;
  auto quad = integrate_de([](double x) { return std::sqrt(x) * weight(0, x); },
                           0.0, kR, 1e-10);
  CHECK(moment_continuation(0, s) == doctest::Approx(quad.value).epsilon(1e-8));
}

TEST_CASE("ogf matches its truncated series") {
  for (auto [M, z] : {std::pair<unsigned, double>{0, 0.05}, {1, 0.02}}) {
    double series = 0.0;
    for (unsigned n = 0; n < 60; ++n) {
      series += brown_tutte(M, n).get_d() * std::pow(z, static_cast<double>(n));
    }
    CAPTURE(M);
    CAPTURE(z);
    CHECK(ogf(M, z) == doctest::Approx(series).epsilon(1e-12));
  }
  CHECK_THROWS_AS(ogf(0, 0.2), DivergenceError);  // R*z > 1
}

TEST_CASE("stieltjes transform limits") {
  CHECK_THROWS_AS(stieltjes_lhs(0, kR), std::domain_error);
  CHECK_THROWS_AS(stieltjes_rhs(0, 5.0, 1e-8), std::domain_error);

  // z -> infinity: z * int W/(z-x) -> A(M,0)
  double z = 1e4 * kR;
  for (unsigned M : {0u, 2u}) {
    auto rhs = stieltjes_rhs(M, z, 1e-9);
    CAPTURE(M);
    CHECK(z * rhs.value == doctest::Approx(brown_tutte(M, 0).get_d()).epsilon(1e-3));
  }
}

TEST_CASE("stieltjes identity at a near-boundary point") {
  double z = 1.05 * kR;
  auto rhs = stieltjes_rhs(2, z, 1e-8);
  CHECK(rhs.converged);
  CHECK(stieltjes_lhs(2, z) == doctest::Approx(rhs.value).epsilon(1e-6));
}

TEST_CASE("verification suite aggregates and sorts") {
  auto reports = verify_suite({1, 0}, 2, {2.0 * kR}, 1e-8);
  REQUIRE_FALSE(reports.empty());
  for (const auto& r : reports) {
    CAPTURE(r.name);
    CAPTURE(r.M);
    CAPTURE(r.parameter);
    CHECK(r.passed);
  }
  for (size_t i = 1; i < reports.size(); ++i) {
    bool ordered =
        std::tie(reports[i - 1].name, reports[i - 1].M, reports[i - 1].parameter) <=
        std::tie(reports[i].name, reports[i].M, reports[i].parameter);
    CHECK(ordered);
  }
  // every family shows up
  bool has_moment = false, has_cont = false, has_stieltjes = false, has_pos = false;
  for (const auto& r : reports) {
    if (r.name == "moment") has_moment = true;
    if (r.name == "continuation") has_cont = true;
    if (r.name == "stieltjes") has_stieltjes = true;
    if (r.name == "positivity") has_pos = true;
  }
  CHECK(has_moment);
  CHECK(has_cont);
  CHECK(has_stieltjes);
  CHECK(has_pos);
}
