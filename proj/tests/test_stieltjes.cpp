#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hhzeta/specfun.hpp"
#include "hhzeta/stieltjes.hpp"

#include <cmath>

using namespace hhz;

namespace {
constexpr double kGamma = 0.5772156649015328606065120900824;
constexpr double kZeta2 = 1.644934066848226436472415166646;
constexpr double kGamma1 = -0.072815845483676724860586375875;
constexpr double kGamma2 = -0.009690363192872318484530386035;
constexpr double kGammaH0 = 0.989055995327972555395395651500;
constexpr double kGammaH1 = 0.400761229957425186010725747217;
constexpr double kGammaH20 = 2.815954136745628269297094361272;
constexpr double kGammaH30 = 2.964523417045259183968907913015;
constexpr double kGammaH21 = 3.09744304173130;
constexpr double kSigma1 = 1.257746886944369630766191847213;
constexpr double kSigma2 = 0.863206801689439238325107413634;
constexpr double kSigma3 = 0.761280179708372130377983539453;
constexpr double kC11 = -0.788530565911508961430317469603;
constexpr double kStar10 = 0.529052969940438860521962662446;
constexpr double kStar20 = 0.555196055352811570269326751318;
constexpr double kStar11 = -0.078850556591800629473248049009;
constexpr double kStar21 = -0.07540416131;
}  // namespace

TEST_CASE("classical constants by the accelerated limit") {
  CHECK(std::abs(gamma_stieltjes(0).value.value - kGamma) < 1e-12);
  CHECK(std::abs(gamma_stieltjes(1).value.value - kGamma1) < 1e-12);
  CHECK(std::abs(gamma_stieltjes(2).value.value - kGamma2) < 1e-11);
}

TEST_CASE("order-1 constants and the closed elementary value") {
  CHECK(std::abs(gamma_H(0).value.value - kGammaH0) < 1e-12);
  CHECK(std::abs(gamma_H(1).value.value - kGammaH1) < 1e-12);
  // gamma_H(0) = gamma^2/2 + zeta(2)/2
  CHECK(std::abs(gamma_H(0).value.value - (kGamma * kGamma / 2 + kZeta2 / 2)) <
        1e-10);
}

TEST_CASE("higher-order constants: all three routes hit the reference") {
  EvalContext ctx;
  CHECK(std::abs(gamma_hr_limit(2, 0, ctx).value.value - kGammaH20) < 1e-12);
  CHECK(std::abs(gamma_hr_limit(3, 0, ctx).value.value - kGammaH30) < 1e-12);
  CHECK(std::abs(gamma_hr_limit(2, 1, ctx).value.value - kGammaH21) < 1e-11);
  CHECK(std::abs(gamma_hr_recurrence(2, 0, ctx).value.value - kGammaH20) <
        1e-11);
  CHECK(std::abs(gamma_hr_recurrence(3, 0, ctx).value.value - kGammaH30) <
        1e-11);
  CHECK(std::abs(gamma_hr_recurrence(2, 1, ctx).value.value - kGammaH21) <
        1e-11);
  CHECK(std::abs(gamma_hr0_closed(2, ctx).value.value - kGammaH20) < 1e-11);
  CHECK(std::abs(gamma_hr0_closed(3, ctx).value.value - kGammaH30) < 1e-11);
  CHECK(std::abs(gamma_hr_closed(2, 1, ctx).value.value - kGammaH21) < 1e-11);
}

TEST_CASE("r = 0 reduces to the classical constants") {
  CHECK(std::abs(gamma_hr_limit(0, 0).value.value - kGamma) < 1e-12);
  CHECK(std::abs(gamma_hr_limit(0, 1).value.value - kGamma1) < 1e-12);
}

TEST_CASE("the fully expanded variant misses by exactly 3/8 at r = 2") {
  EvalContext ctx;
  double gap = gamma_hr0_closed(2, ctx).value.value -
               gamma_hr0_explicit_printed(2, ctx).value.value;
  CHECK(std::abs(gap - 0.375) < 1e-10);
}

TEST_CASE("sigma constants: dual routes and references") {
  EvalContext ctx;
  CHECK(std::abs(sigma(1, ctx).value.value - kSigma1) < 1e-12);
  CHECK(std::abs(sigma(2, ctx).value.value - kSigma2) < 1e-12);
  CHECK(std::abs(sigma(3, ctx).value.value - kSigma3) < 1e-12);
  for (int k = 1; k <= 6; ++k)
    CHECK(std::abs(sigma_defining(k, ctx).value - sigma_swapped(k, ctx).value) <
          1e-10);
}

TEST_CASE("log-tail constant") {
  CHECK(std::abs(c_const(1, 1).value.value - kC11) < 1e-12);
}

TEST_CASE("the digamma-harmonic combination vanishes identically") {
  for (int r = 1; r <= 8; ++r) CHECK(std::abs(delta_combo(r)) < 1e-12);
  CHECK(delta(0) == 1);
  CHECK(delta(3) == 0);
}

TEST_CASE("limit route refines monotonically with the term budget") {
  double prev_err = 1.0;
  double prev_val = 0.0;
  bool first = true;
  for (long n : {2000L, 4000L, 8000L}) {
    EvalContext ctx;
    ctx.n_terms = n;
    ConstantResult c = gamma_hr_limit(2, 0, ctx);
    CHECK(c.value.err <= prev_err + 1e-16);
    if (!first) CHECK(std::abs(c.value.value - prev_val) <= prev_err + c.value.err);
    prev_err = c.value.err;
    prev_val = c.value.value;
    first = false;
  }
}

TEST_CASE("star constants: limit route hits the references") {
  EvalContext ctx;
  CHECK(std::abs(gamma_star_limit(1, 0, ctx).value.value - kStar10) < 1e-10);
  CHECK(std::abs(gamma_star_limit(2, 0, ctx).value.value - kStar20) < 1e-10);
  CHECK(std::abs(gamma_star_limit(1, 1, ctx).value.value - kStar11) < 1e-10);
  CHECK(std::abs(gamma_star_limit(2, 1, ctx).value.value - kStar21) < 1e-10);
}

TEST_CASE("star constants: formula route agrees with the limit route") {
  EvalContext ctx;
  for (int r = 1; r <= 2; ++r)
    for (int m = 0; m <= 1; ++m) {
      ConstantResult f = gamma_star_formula(r, m, ctx);
      ConstantResult l = gamma_star_limit(r, m, ctx);
      CHECK(std::abs(f.value.value - l.value.value) < 1e-8);
      CHECK_FALSE(l.best_effort);
    }
}

TEST_CASE("result metadata is labeled") {
  ConstantResult c = gamma_hr_limit(2, 1);
  CHECK(c.r == 2);
  CHECK(c.m == 1);
  CHECK(c.method == Method::limit);
  CHECK(c.terms_used > 0);
  CHECK(std::string(to_string(c.kind)) == "gamma_hr");
  CHECK(std::string(to_string(c.method)) == "limit");
}
