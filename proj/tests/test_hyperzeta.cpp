#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hhzeta/hyperzeta.hpp"
#include "hhzeta/quadrature.hpp"
#include "hhzeta/specfun.hpp"

#include <cmath>
#include <vector>

using namespace hhz;

namespace {
constexpr double kGamma = 0.5772156649015328606065120900824;
constexpr double kZeta3 = 1.202056903159594285399738161511;
constexpr double kZeta2 = 1.644934066848226436472415166646;
// sum_k H_{k+1} k^-2 = 2 zeta(3) + zeta(2) - 1
constexpr double kZH21 = 2 * kZeta3 + kZeta2 - 1.0;
}  // namespace

TEST_CASE("series sums the order-1 Euler sum to 2 zeta(3)") {
  Real v = zh_series(1, 2.0, 0);
  CHECK(std::abs(v.value - 2 * kZeta3) < 1e-12);
  CHECK(std::abs(v.value - 2 * kZeta3) <= v.err + 1e-15);
}

TEST_CASE("order zero reduces to a shifted zeta function") {
  Real v = zh_series(0, 1.5, 0);
  CHECK(std::abs(v.value - riemann_zeta(2.5).value) < 1e-12);
}

TEST_CASE("series and continuation agree in the common region") {
  EvalContext ctx;
  for (int r = 1; r <= 3; ++r)
    for (double off : {0.5, 1.0, 2.0}) {
      Real a = zh_series(r, r + off, 0, ctx);
      Real b = zh_continued(r, r + off, 3, ctx);
      CHECK(std::abs(a.value - b.value) < 1e-9);
      CHECK(std::abs(a.value - b.value) <= a.err + b.err + 1e-14);
    }
}

TEST_CASE("series derivative matches a central difference") {
  const double h = 1e-4;
  double fd = (zh_series(2, 3.5 + h, 0).value - zh_series(2, 3.5 - h, 0).value) /
              (2 * h);
  CHECK(std::abs(zh_series(2, 3.5, 1).value - fd) < 1e-6);
}

TEST_CASE("continuation is stable in the correction order") {
  EvalContext ctx;
  Real a = zh_continued(2, 0.5, 2, ctx);
  Real b = zh_continued(2, 0.5, 3, ctx);
  CHECK(std::abs(a.value - b.value) < 1e-9);
}

TEST_CASE("continuation rejects the pole set") {
  CHECK_THROWS_AS((void)zh_continued(2, 2.0, 3), pole_error);
  CHECK_THROWS_AS((void)zh_continued(3, 1.0, 3), pole_error);
  CHECK_THROWS_AS((void)zh_continued(1, 0.0, 3), pole_error);
}

TEST_CASE("auxiliary double sum routes agree") {
  EvalContext ctx;
  for (double q : {0.5, 1.5, 2.0, 3.0})
    for (int v = 1; v <= 3; ++v) {
      Real a = aux_double_sum(q, v, ctx, AuxRoute::direct);
      Real b = aux_double_sum(q, v, ctx, AuxRoute::expanded);
      CHECK(std::abs(a.value - b.value) < 1e-9);
    }
  // v = 0 degenerates to zeta(q + 1)
  Real z = aux_double_sum(2.0, 0, ctx);
  CHECK(std::abs(z.value - kZeta3) < 1e-12);
}

TEST_CASE("auxiliary double sum rejects its poles") {
  CHECK_THROWS_AS((void)aux_double_sum(0.0, 2, {}, AuxRoute::expanded),
                  pole_error);
  CHECK_THROWS_AS((void)aux_double_sum(-1.0, 2, {}, AuxRoute::expanded),
                  pole_error);
}

TEST_CASE("shifted harmonic sum: direct, closed, and the exact value") {
  EvalContext ctx;
  CHECK(std::abs(zH_shifted(2.0, 1, 0, ctx).value - kZH21) < 1e-12);
  CHECK(std::abs(zH_shifted_closed(2, 1, ctx).value - kZH21) < 1e-12);
  for (int p = 2; p <= 5; ++p)
    for (int a = 0; a <= 3; ++a) {
      Real d = zH_shifted(static_cast<double>(p), a, 0, ctx);
      Real c = zH_shifted_closed(p, a, ctx);
      CHECK(std::abs(d.value - c.value) < 1e-10);
    }
  // the as-printed variant misses by H_{a+1}/(a+1)^p
  double gap = zH_shifted(2.0, 1, 0, ctx).value -
               zH_shifted_closed_printed(2, 1, ctx).value;
  CHECK(std::abs(gap - 0.375) < 1e-10);
}

TEST_CASE("remainder term matches a direct quadrature evaluation") {
  // R(s,k,j) = sum_i J_i H_i^(p) with J_i = int_0^1 B_{2k+1}(u)(u+i)^-q du
  const int k = 2, j = 1;
  const double s = 0.5;
  const double p = s + 1 - j;
  const double q = 2 * k + 2;
  QuadSettings qs;
  qs.panel_tol = 1e-15;
  double ref = 0.0;
  std::vector<double> Hp(2001, 0.0);
  for (int i = 1; i <= 2000; ++i)
    Hp[i] = Hp[i - 1] + std::pow(static_cast<double>(i), -p);
  for (int i = 1; i <= 2000; ++i) {
    auto f = [&](double u) {
      return bernoulli_periodic(2 * k + 1, u).value * std::pow(u + i, -q);
    };
    ref += integrate(f, 0.0, 1.0, qs).value * Hp[i];
  }
  Real r = remainder_R(s, k, j);
  CHECK(std::abs(r.value - ref) < 1e-9);
}

TEST_CASE("Laurent data reproduces the principal part and regular head") {
  EvalContext ctx;
  for (int r = 1; r <= 3; ++r) {
    LaurentData L = laurent_data(r, 2, ctx);
    double gam_r = 1.0;
    for (int i = 2; i < r; ++i) gam_r *= i;
    const double psi_r = harmonic_d(r - 1) - kGamma;
    CHECK(std::abs(L.a_minus2.value - 1.0 / gam_r) < 1e-14);
    CHECK(std::abs(L.a_minus1.value + psi_r / gam_r) < 1e-13);
  }
  LaurentData L2 = laurent_data(2, 1, ctx);
  CHECK(std::abs(L2.gammas[0].value - 2.81595413674562827) < 1e-11);
}
