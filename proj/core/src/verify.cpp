#include "hhzeta/verify.hpp"

#include "hhzeta/expint.hpp"
#include "hhzeta/hyperharm.hpp"
#include "hhzeta/hyperzeta.hpp"
#include "hhzeta/logpoly.hpp"
#include "hhzeta/quadrature.hpp"
#include "hhzeta/specfun.hpp"
#include "hhzeta/stieltjes.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <vector>

namespace hhz {

namespace {

IdentityReport make_report(std::string id, Real lhs, Real rhs, double tol,
                           std::string notes) {
  IdentityReport rep;
  rep.id = std::move(id);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.abs_diff = std::abs(lhs.value - rhs.value);
  rep.tol = tol;
  rep.pass = rep.abs_diff <= tol;
  rep.notes = std::move(notes);
  return rep;
}

Rational rat_factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Rational rat_pow(long k, int e) {
  Rational p = 1;
  for (int i = 0; i < e; ++i) p *= k;
  return p;
}

long long binom_ll(int n, int k) {
  long long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

double factorial_d(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Both sides of the finite log-sum identity as exact polynomials in
/// prime logarithms. printed_variant reproduces the single-power tail
/// correction (valid only for m <= 1) instead of the binomial cross-terms.
void lemma_top_sides(long n, int r, int m, bool printed_variant, LogPoly& lhs,
                     LogPoly& rhs) {
  auto lp = [](long k, int e) { return LogPoly::log_of_int(k).pow(e); };
  const Rational G = Rational(1) / rat_factorial(r - 1);

  lhs = LogPoly();
  for (long k = 1; k <= n; ++k)
    lhs.add_scaled(lp(k, m), hh_exact(k, r) / rat_pow(k, r));

  // cumulative harmonic numbers through n + r - 1
  std::vector<Rational> H(static_cast<size_t>(n + r), 0);
  for (long k = 1; k < n + r; ++k)
    H[static_cast<size_t>(k)] = H[static_cast<size_t>(k - 1)] + Rational(1, k);
  const Rational Hr1 = H[static_cast<size_t>(r - 1)];

  rhs = LogPoly();
  Rational Hk = 0;
  for (long k = 1; k <= n; ++k) {
    Hk += Rational(1, k);
    rhs.add_scaled(lp(k, m), G * Hk / k);
  }
  for (int j = 1; j <= r - 1; ++j)
    for (long k = 1; k <= n + j; ++k)
      rhs.add_scaled(lp(k, m), -G / (Rational(j) * k));

  for (int j = 0; j <= r - 1; ++j) {
    const Rational w = Rational(stirling_first(r, j));
    if (w == 0) continue;
    for (long k = 1; k <= n; ++k)
      rhs.add_scaled(lp(k, m), G * w * (H[static_cast<size_t>(k + r - 1)] - Hr1) /
                                   rat_pow(k, r + 1 - j));
  }

  for (int j = 1; j <= r - 1; ++j) {
    for (long k = 1; k <= j; ++k)
      rhs.add_scaled(lp(k, m), G / (Rational(j) * k));
    if (printed_variant) {
      for (long k = j + 1; k <= n + j; ++k) {
        LogPoly l = LogPoly::log_of_int(k - j);
        l.add_scaled(LogPoly::log_of_int(k), -1);
        rhs.add_scaled(l.pow(m), -G / (Rational(j) * k));
      }
    } else {
      for (int i = 1; i <= m; ++i) {
        const Rational bc = binom_ll(m, i);
        for (long k = j + 1; k <= n + j; ++k) {
          LogPoly l = LogPoly::log_of_int(k - j);
          l.add_scaled(LogPoly::log_of_int(k), -1);
          rhs.add_scaled(lp(k, m - i) * l.pow(i), -G * bc / (Rational(j) * k));
        }
      }
    }
  }
}

/// int_0^inf K(t) g(t) dt for a positive decreasing g with g(t) <= g(0) e^-t,
/// |K| < 1 everywhere and |K| <= 0.6 near 0.
Real kernel_weighted_integral(const std::function<double(double)>& g, double g0,
                              double tol, const QuadSettings& qs0) {
  const double eps = std::min(tol / (6.0 * std::max(g0, 1e-30)), 1e-4);
  const double T = std::max(6.0, std::log(10.0 * std::max(g0, 1.0) / tol));
  QuadSettings qs = qs0;
  qs.panel_tol = tol / 20.0;
  auto f = [&](double t) { return kernel(t).value * g(t); };
  double acc = 0.0;
  double err = 0.6 * eps * g0 + g0 * std::exp(-T);
  const double splits[4] = {eps, 1.0, 5.0, T};
  for (int i = 0; i + 1 < 4; ++i) {
    QuadResult q = integrate(f, splits[i], splits[i + 1], qs);
    acc += q.value;
    err += 2.0 * q.err;
  }
  return Real{acc, err};
}

Real laplace_of_kernel(double z, const EvalContext& ctx) {
  auto g = [z](double t) { return std::exp(-z * t); };
  return kernel_weighted_integral(g, 1.0, std::min(ctx.tol, 1e-10), ctx.quad);
}

}  // namespace

IdentityReport check_lemma_top(long n, int r, int m, const EvalContext&) {
  if (n < 1 || r < 1 || m < 0)
    throw domain_error("check_lemma_top: need n >= 1, r >= 1, m >= 0");
  LogPoly lhs, rhs;
  lemma_top_sides(n, r, m, false, lhs, rhs);
  LogPoly diff = lhs;
  diff.add_scaled(rhs, -1);

  std::ostringstream id;
  id << "finite-log-sum-n" << n << "-r" << r << "-m" << m;
  std::ostringstream notes;
  notes << "exact rational comparison over grouped prime logarithms; "
        << diff.size() << " residual monomials, max residual coefficient "
        << diff.max_coeff();
  return make_report(id.str(), Real{lhs.eval(), 0.0}, Real{rhs.eval(), 0.0},
                     1e-12, notes.str());
}

IdentityReport check_lemma_int(double n, int r, int m, const EvalContext& ctx) {
  if (n <= 1.0 || r < 1 || m < 0)
    throw domain_error("check_lemma_int: need n > 1, r >= 1, m >= 0");
  const double tol = std::clamp(ctx.tol, 1e-12, 1e-9);
  QuadSettings qs = ctx.quad;
  qs.panel_tol = tol / 10.0;
  const double gam_r = factorial_d(r - 1);
  const double psi_r = harmonic_d(r - 1) - kEulerGamma;

  auto f_lhs = [&](double x) {
    return hh_analytic(x, r).value * std::pow(std::log(x), m) * std::pow(x, -r);
  };
  QuadResult ql = integrate(f_lhs, 1.0, n, qs);
  Real lhs{gam_r * ql.value, gam_r * ql.err};

  const double ln_n = std::log(n);
  double rhs_v = std::pow(ln_n, m + 2) / (m + 2) -
                 psi_r * std::pow(ln_n, m + 1) / (m + 1) +
                 rising_factorial(n, r).value * std::pow(ln_n, m) /
                     std::pow(n, r + 1);
  // boundary of the rising-factorial part at the lower endpoint; nonzero
  // only for m = 0
  if (m == 0) rhs_v -= factorial_d(r);
  double rhs_e = 1e-14;

  auto f_elem = [&](double x) {
    const double lx = std::log(x);
    const double lm = std::pow(lx, m);
    double acc = 0.0;
    for (int j = 0; j <= r - 1; ++j) {
      const double w = stirling_first(r, j).convert_to<double>();
      if (w != 0.0)
        acc += w * (lx * lm - psi_r * lm) * std::pow(x, -(r + 1 - j));
    }
    for (int j = 0; j <= r; ++j) {
      const double w = stirling_first(r, j).convert_to<double>();
      if (w == 0.0) continue;
      double t = (r + 1) * lm;
      if (m > 0) t -= m * std::pow(lx, m - 1);
      acc += w * t * std::pow(x, -(r + 2 - j));
    }
    return acc;
  };
  QuadResult qe = integrate(f_elem, 1.0, n, qs);
  rhs_v += qe.value;
  rhs_e += qe.err;

  QuadSettings qs_in = ctx.quad;
  qs_in.panel_tol = tol / 100.0;
  for (int j = 0; j <= r; ++j) {
    const double w = stirling_first(r, j).convert_to<double>();
    if (w == 0.0) continue;
    const int p = r + 1 - j;
    auto inner = [&](double t) {
      auto fx = [&](double x) {
        return std::pow(std::log(x), m) * std::pow(x, -p) * std::exp(-x * t);
      };
      return integrate(fx, 1.0, n, qs_in).value;
    };
    const double g0 = inner(0.0);
    Real d = kernel_weighted_integral(inner, g0, tol, ctx.quad);
    rhs_v += w * d.value;
    rhs_e += std::abs(w) * (d.err + tol / 50.0);
  }

  std::ostringstream id;
  id << "hyperharmonic-integral-n" << n << "-r" << r << "-m" << m;
  return make_report(id.str(), lhs, Real{rhs_v, rhs_e},
                     std::max(ctx.tol, 1e-8),
                     "nested quadrature of the kernel double integral; "
                     "includes the lower-endpoint boundary constant for m = 0");
}

IdentityReport check_laurent(int r, const EvalContext& ctx, double a1_perturb) {
  if (r < 1) throw domain_error("check_laurent: r >= 1 required");
  LaurentData L = laurent_data(r, 2, ctx);
  const double hs[3] = {0.05, 0.025, 0.0125};
  double d[3];
  for (int i = 0; i < 3; ++i) {
    const double h = hs[i];
    double model = L.a_minus2.value / (h * h) +
                   (L.a_minus1.value + a1_perturb) / h + L.gammas[0].value -
                   L.gammas[1].value * h + L.gammas[2].value * h * h / 2.0;
    d[i] = zh_continued(r, r + h, 3, ctx).value - model;
  }
  auto mag = [](double x) { return std::max(std::abs(x), 1e-16); };
  const double o1 = std::log2(mag(d[0]) / mag(d[1]));
  const double o2 = std::log2(mag(d[1]) / mag(d[2]));
  const double order = std::min(o1, o2);

  std::ostringstream id, notes;
  notes << "residuals " << d[0] << ", " << d[1] << ", " << d[2]
        << " on halving steps; fitted contact orders " << o1 << ", " << o2;
  IdentityReport rep;
  if (a1_perturb == 0.0) {
    id << "laurent-contact-r" << r;
    rep = make_report(id.str(), Real{order, 0.0}, Real{3.0, 0.0}, 0.0,
                      notes.str());
    rep.abs_diff = std::max(0.0, 3.0 - order);
    rep.tol = 0.3;
    rep.pass = order >= 2.7;
  } else {
    id << "laurent-contact-r" << r << "-negative-control";
    notes << "; pole coefficient perturbed by " << a1_perturb
          << ", contact order must collapse below 1.2";
    rep = make_report(id.str(), Real{order, 0.0}, Real{1.2, 0.0}, 0.0,
                      notes.str());
    rep.abs_diff = std::max(0.0, order - 1.2);
    rep.tol = 0.0;
    rep.pass = order < 1.2;
  }
  return rep;
}

std::vector<IdentityReport> adjudicate_misprints(const EvalContext& ctx) {
  std::vector<IdentityReport> out;

  // shifted harmonic zeta closed form: final-sum upper limit
  {
    Real direct = zH_shifted(2.0, 1, 0, ctx);
    Real corr = zH_shifted_closed(2, 1, ctx);
    Real printed = zH_shifted_closed_printed(2, 1, ctx);
    out.push_back(make_report(
        "shifted-harmonic-closed-adjudicated", corr, direct, 1e-8,
        "closed form with final sum running to the shift matches the direct "
        "sum (p = 2, a = 1)"));
    out.push_back(make_report(
        "shifted-harmonic-closed-printed-gap", direct - printed,
        Real{0.375, 0.0}, 1e-6,
        "variant with final sum running one index higher falls short by "
        "H_{a+1}/(a+1)^p = 3/8 at p = 2, a = 1"));
  }

  // fully explicit order-2 constant formula
  {
    Real lim = gamma_hr_limit(2, 0, ctx).value;
    Real closed = gamma_hr0_closed(2, ctx).value;
    Real printed = gamma_hr0_explicit_printed(2, ctx).value;
    out.push_back(make_report(
        "explicit-constant-adjudicated-r2", closed, lim, 1e-6,
        "closed combination matches the accelerated limit at r = 2"));
    out.push_back(make_report(
        "explicit-constant-printed-gap-r2", lim - printed, Real{0.375, 0.0},
        1e-6,
        "fully expanded variant (inner harmonic sum running to r instead of "
        "r - 1) falls short by exactly 3/8 at r = 2"));
  }

  // leading pole coefficient: 1/(r-1)!, not 1/r!
  for (int r = 2; r <= 3; ++r) {
    auto A = [&](double h) {
      return h * h * zh_continued(r, r + h, 3, ctx).value;
    };
    const double h = 0.2;
    const double fit = A(h) / 3.0 - 2.0 * A(h / 2) + (8.0 / 3.0) * A(h / 4);
    std::ostringstream id, notes;
    id << "pole-coefficient-factorial-r" << r;
    notes << "quadratic extrapolation of (s-r)^2 zeta_h to s = r gives " << fit
          << "; 1/(r-1)! = " << 1.0 / factorial_d(r - 1)
          << " matches while 1/r! = " << 1.0 / factorial_d(r) << " does not";
    out.push_back(make_report(id.str(), Real{fit, 0.01},
                              Real{1.0 / factorial_d(r - 1), 0.0}, 0.02,
                              notes.str()));
  }

  // finite log-sum tail correction: single power vs binomial cross-terms
  {
    LogPoly lhs, rhs;
    lemma_top_sides(50, 2, 2, true, lhs, rhs);
    LogPoly diff = lhs;
    diff.add_scaled(rhs, -1);
    std::ostringstream notes;
    notes << "single-power tail correction breaks the exact identity at m = 2 "
             "(residual "
          << diff.eval()
          << "); the binomial cross-term form restores it exactly";
    out.push_back(make_report("finite-log-sum-tail-variant-m2",
                              Real{std::abs(diff.eval()), 0.0}, Real{0.0, 0.0},
                              0.0, notes.str()));
    out.back().pass = std::abs(diff.eval()) > 1e-3;
    out.back().tol = 1e-3;
    out.back().notes += "; pass records that the variant is detectably wrong";
  }

  return out;
}

std::vector<IdentityReport> run_suite(const std::string& selection,
                                      const EvalContext& ctx) {
  static const char* kGroups[] = {"all",      "routes", "sigma", "integrals",
                                  "top",      "int",    "laurent",
                                  "misprints"};
  bool known = false;
  for (const char* g : kGroups) known = known || selection == g;
  if (!known) throw domain_error("run_suite: unknown suite: " + selection);
  const bool all = selection == "all";
  auto want = [&](const char* g) { return all || selection == g; };

  std::vector<IdentityReport> out;

  if (want("routes")) {
    for (int r = 1; r <= 3; ++r)
      for (double off : {0.5, 1.0, 2.0}) {
        std::ostringstream id;
        id << "series-vs-continuation-r" << r << "-s" << r + off;
        out.push_back(make_report(
            id.str(), zh_series(r, r + off, 0, ctx),
            zh_continued(r, r + off, 3, ctx), 1e-6,
            "direct Dirichlet series against the continuation assembly"));
      }
    out.push_back(make_report(
        "euler-sum-order1-s2", zh_series(1, 2.0, 0, ctx),
        2.0 * riemann_zeta(3.0, 0, ctx), 1e-8,
        "harmonic-weighted sum at s = 2 equals twice zeta(3)"));
    for (int r = 2; r <= 3; ++r)
      for (int m = 0; m <= 1; ++m) {
        Real lim = gamma_hr_limit(r, m, ctx).value;
        {
          std::ostringstream id;
          id << "constant-recurrence-vs-limit-r" << r << "-m" << m;
          out.push_back(make_report(id.str(),
                                    gamma_hr_recurrence(r, m, ctx).value, lim,
                                    1e-4, "order recurrence grounded at r = 1"));
        }
        {
          std::ostringstream id;
          id << "constant-closed-vs-limit-r" << r << "-m" << m;
          Real closed = (m == 0) ? gamma_hr0_closed(r, ctx).value
                                 : gamma_hr_closed(r, m, ctx).value;
          out.push_back(make_report(id.str(), closed, lim,
                                    m == 0 ? 1e-5 : 1e-4,
                                    "closed combination route"));
        }
      }
    for (int r = 1; r <= 2; ++r)
      for (int m = 0; m <= 1; ++m) {
        std::ostringstream id;
        id << "star-formula-vs-limit-r" << r << "-m" << m;
        out.push_back(make_report(
            id.str(), gamma_star_formula(r, m, ctx).value,
            gamma_star_limit(r, m, ctx).value, 1e-4,
            "kernel-integral formula against the sum-minus-integral limit"));
      }
    for (int p = 2; p <= 5; ++p)
      for (int a = 0; a <= 3; ++a) {
        std::ostringstream id;
        id << "shifted-harmonic-closed-p" << p << "-a" << a;
        out.push_back(make_report(id.str(), zH_shifted_closed(p, a, ctx),
                                  zH_shifted(p, a, 0, ctx), 1e-8,
                                  "closed form against direct summation"));
      }
  }

  if (want("sigma")) {
    for (int k = 1; k <= 6; ++k) {
      std::ostringstream id;
      id << "sigma-swap-k" << k;
      out.push_back(make_report(
          id.str(), sigma_defining(k, ctx), sigma_swapped(k, ctx), 1e-10,
          "alternating zeta combination equals sum n^-k ln(1 + 1/n)"));
    }
  }

  if (want("integrals")) {
    Real z2 = riemann_zeta(2.0, 0, ctx);
    out.push_back(make_report(
        "kernel-integral-p1", kernel_E_integral(1, 0, ctx),
        Real{0.0, 0.0} - gamma_stieltjes(1, ctx).value - sigma(1, ctx).value +
            z2 - 1.0,
        1e-6, "quadrature against -gamma(1) - sigma_1 + zeta(2) - 1"));
    out.push_back(make_report(
        "kernel-integral-p2", kernel_E_integral(2, 0, ctx),
        sigma(2, ctx).value - riemann_zeta(2.0, 1, ctx) - kEulerGamma - 1.5,
        1e-6, "quadrature against -gamma + sigma_2 - zeta'(2) - 3/2"));
    out.push_back(make_report(
        "kernel-integral-system-p3", kernel_E_integral(3, 0, ctx),
        kernel_E_closed(3, ctx), 1e-5,
        "quadrature against the order-3 closed-form triangular system"));
    for (int p = 1; p <= 2; ++p) {
      std::ostringstream id;
      id << "kernel-integral-closed-p" << p;
      out.push_back(make_report(id.str(), kernel_E_closed(p, ctx),
                                kernel_E_integral(p, 0, ctx), 1e-6,
                                "closed-form system against quadrature"));
    }
    for (double z : {1.0, 2.0, 3.5}) {
      std::ostringstream id;
      id << "digamma-kernel-z" << z;
      out.push_back(make_report(
          id.str(), digamma(z, ctx),
          laplace_of_kernel(z, ctx) + std::log(z), 1e-8,
          "digamma equals ln z plus the Laplace transform of the kernel"));
    }
  }

  if (want("top")) {
    for (long n : {1L, 10L, 50L, 200L})
      for (int r = 1; r <= 4; ++r)
        for (int m = 0; m <= 3; ++m) out.push_back(check_lemma_top(n, r, m, ctx));
  }

  if (want("int")) {
    out.push_back(check_lemma_int(2.0, 1, 0, ctx));
    out.push_back(check_lemma_int(5.0, 2, 1, ctx));
    out.push_back(check_lemma_int(10.0, 3, 0, ctx));
  }

  if (want("laurent")) {
    out.push_back(check_laurent(1, ctx));
    out.push_back(check_laurent(2, ctx));
    out.push_back(check_laurent(1, ctx, 1e-3));
  }

  if (want("misprints")) {
    auto reps = adjudicate_misprints(ctx);
    out.insert(out.end(), reps.begin(), reps.end());
  }

  return out;
}

}  // namespace hhz
