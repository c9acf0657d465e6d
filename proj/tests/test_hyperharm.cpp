#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hhzeta/hyperharm.hpp"
#include "hhzeta/smooth_sum.hpp"
#include "hhzeta/specfun.hpp"

#include <cmath>

using namespace hhz;

TEST_CASE("hh_exact base values") {
  CHECK(hh_exact(1, 5) == Rational(1));
  CHECK(hh_exact(3, 1) == Rational(11, 6));
  CHECK(hh_exact(2, 2) == Rational(5, 2));
  CHECK(hh_exact(4, 0) == Rational(1, 4));
}

TEST_CASE("hh_exact telescoping definition") {
  for (int r = 0; r <= 5; ++r)
    for (long n = 1; n <= 30; ++n) {
      Rational acc = 0;
      for (long k = 1; k <= n; ++k) acc += hh_exact(k, r);
      CHECK(acc == hh_exact(n, r + 1));
    }
}

TEST_CASE("hh_step matches hh_exact") {
  CHECK(hh_step(2, 1) == Rational(5, 2));
  CHECK(hh_step(1, 4) == Rational(1));
  CHECK(hh_step(3, 1) == Rational(13, 3));
  for (int r = 1; r <= 6; ++r)
    for (long n = 1; n <= 100; n += 7)
      CHECK(hh_step(n, r) == hh_exact(n, r + 1));
}

TEST_CASE("hh_closed matches hh_exact") {
  CHECK(hh_closed(2, 2).value == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(hh_closed(1, 3).value == doctest::Approx(1.0).epsilon(1e-14));
  for (int r = 1; r <= 6; ++r)
    for (long n = 1; n <= 100; n += 9) {
      const double exact = hh_exact(n, r).convert_to<double>();
      CHECK(std::abs(hh_closed(n, r).value - exact) <= 1e-12 * std::abs(exact));
    }
}

TEST_CASE("hh_analytic at integers and conventions") {
  CHECK(hh_analytic(3, 1).value == doctest::Approx(11.0 / 6).epsilon(1e-12));
  CHECK(hh_analytic(1, 2).value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(hh_analytic(4, 0).value == doctest::Approx(0.25).epsilon(1e-14));
  // r=1: h_x^(1) = psi(x+1) + gamma, interpolating H_n between integers.
  CHECK(hh_analytic(2.5, 1).value ==
        doctest::Approx(digamma(3.5).value + 0.5772156649015329)
            .epsilon(1e-12));
  for (int r = 1; r <= 5; ++r)
    for (long n = 1; n <= 50; n += 7) {
      const double exact = hh_exact(n, r).convert_to<double>();
      CHECK(hh_analytic(static_cast<double>(n), r).value ==
            doctest::Approx(exact).epsilon(1e-10));
    }
}

TEST_CASE("streaming doubles track exact values") {
  for (int r : {0, 1, 3, 6}) {
    HyperharmonicStream st(r);
    for (long n = 1; n <= 200; ++n) {
      const double v = st.next();
      const double exact = hh_exact(n, r).convert_to<double>();
      CHECK(v == doctest::Approx(exact).epsilon(1e-13));
    }
  }
}

TEST_CASE("smooth model matches h_x^(r) ln^m x / x^r at large x") {
  for (int r : {1, 2, 3})
    for (int m : {0, 1, 2}) {
      SmoothLogSum f = hh_log_model(r, m, 8);
      for (double x : {50.0, 200.0, 1000.0}) {
        const double truth = hh_analytic(x, r).value *
                             std::pow(std::log(x), m) / std::pow(x, r);
        CHECK(f.eval(x) == doctest::Approx(truth).epsilon(1e-10));
      }
    }
}
