#include "hhzeta/expint.hpp"

#include "hhzeta/quadrature.hpp"
#include "hhzeta/specfun.hpp"
#include "hhzeta/stieltjes.hpp"

#include <cmath>
#include <vector>

namespace hhz {

namespace {

double factorial_d(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

Real kernel(double t) {
  if (t <= 0) throw domain_error("kernel: t must be > 0");
  if (t < 0.1) {
    // K(t) = -sum_{n>=1} B_n(1) t^(n-1)/n! = -1/2 - sum_j B_2j t^(2j-1)/(2j)!
    double acc = -0.5;
    double tp = t;  // t^(2j-1)
    double fact = 2.0;
    for (int j = 1; j <= 6; ++j) {
      acc -= bernoulli_number(2 * j).convert_to<double>() / fact * tp;
      tp *= t * t;
      fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    return Real{acc, 1e-16};
  }
  const double v = 1.0 / t - 1.0 / (-std::expm1(-t));
  return Real{v, std::abs(v) * 4e-16 + 1e-17};
}

Real exp_integral(double s, int m, double t, const EvalContext& ctx) {
  if (m < 0) throw domain_error("exp_integral: m >= 0 required");
  if (t < 0) throw domain_error("exp_integral: t >= 0 required");
  const double mfact = factorial_d(m);
  if (t == 0.0) {
    if (s <= 1.0)
      throw divergence_error("exp_integral: divergent at t = 0 for s <= 1");
    return Real{std::pow(s - 1.0, -(m + 1.0)), 1e-16};
  }
  auto f = [&](double x) {
    return std::exp(-x * t) * std::pow(x, -s) * std::pow(std::log(x), m) / mfact;
  };
  // Truncate where the integrand's envelope is negligible: the residual tail
  // is below e^{-Xt} X^{-s} ln^m(X) (1/t + ...) / m!.
  const double tol = std::max(ctx.tol * 1e-3, 1e-16);
  double X = 1.0, env = 0.0;
  while (X < 1e15) {
    env = std::exp(-X * t) * std::pow(X, std::max(-s, 0.0)) *
          std::pow(std::log(X) + 1.0, m) / mfact / t;
    if (env < tol) break;
    X *= 2.0;
  }
  QuadSettings qs = ctx.quad;
  qs.panel_tol = tol;
  double lo = 1.0, width = 1.0, acc = 0.0, err = 0.0;
  while (lo < X) {
    const double hi = std::min(lo + width, X);
    QuadResult q = integrate(f, lo, hi, qs);
    acc += q.value;
    err += q.err;
    lo = hi;
    width *= 2.0;
  }
  return Real{acc, err + tol + env};
}

Real kernel_E_integral(int p, int m, const EvalContext& ctx) {
  if (p < 1) throw domain_error("kernel_E_integral: p >= 1 required");
  const double tol = std::max(ctx.tol, 1e-10);
  EvalContext inner = ctx;
  inner.tol = tol * 1e-2;
  auto f = [&](double t) {
    return kernel(t).value * exp_integral(static_cast<double>(p), m, t, inner).value;
  };
  // Lower cutoff: |K| <= 0.6 near 0; for p = 1 the integrand grows like
  // ln^{m+1}(1/t)/(m+1)!, so int_0^eps is below 0.6 eps ln^{m+1}(1/eps)/(m+1)!.
  double eps = 1e-8;
  double low_bound;
  for (;;) {
    if (p == 1)
      low_bound = 0.6 * eps * std::pow(std::log(1.0 / eps), m + 1) /
                  factorial_d(m + 1);
    else
      low_bound = 0.6 * eps * std::pow(p - 1.0, -(m + 1.0));
    if (low_bound < tol / 10.0 || eps < 1e-13) break;
    eps *= 0.5;
  }
  // Upper truncation: |int_T^inf K E| <= (1 + 1/T) e^{-T}/T.
  double T = 10.0;
  while ((1.0 + 1.0 / T) * std::exp(-T) / T > tol / 10.0 && T < 200.0) T += 5.0;

  QuadSettings qs = ctx.quad;
  qs.panel_tol = tol / 20.0;
  // |K| <= 1 everywhere, so inner evaluation errors enter at most T-fold.
  double acc = 0.0, err = low_bound + (1.0 + 1.0 / T) * std::exp(-T) / T +
                          T * std::max(inner.tol * 1e-3, 1e-16);
  // geometric panels up to 1: the integrand carries t ln t curvature from
  // the endpoint expansion of E, which defeats error estimation on wide panels
  std::vector<double> splits;
  for (double x = eps; x < 1.0; x *= 8.0) splits.push_back(x);
  splits.push_back(1.0);
  splits.push_back(10.0);
  splits.push_back(T);
  for (size_t i = 0; i + 1 < splits.size(); ++i) {
    if (splits[i + 1] <= splits[i]) continue;
    QuadResult q = integrate(f, splits[i], splits[i + 1], qs);
    acc += q.value;
    err += 2.0 * q.err;  // GK15 estimates run optimistic near the log endpoint
  }
  return Real{acc, err};
}

Real kernel_E_closed(int p, const EvalContext& ctx) {
  if (p < 1) throw domain_error("kernel_E_closed: p >= 1 required");
  // Solve sum_{j=1}^{r} [r j] I_{r+1-j} = RHS(r) for r = 1..p; the
  // coefficient of the new unknown I_r is [r 1] = (r-1)!.
  std::vector<double> I(static_cast<size_t>(p) + 1, 0.0);
  double err = 0.0;
  for (int r = 1; r <= p; ++r) {
    const double g = kEulerGamma;
    const double psi_r = harmonic_d(r - 1) - g;
    Real ghr = gamma_hr0_closed(r, ctx).value;
    Real s1 = sigma(1, ctx).value;
    Real g1 = gamma_stieltjes(1, ctx).value;
    double rhs = factorial_d(r - 1) * ghr.value - 0.5 * g * g +
                 0.5 * riemann_zeta(2.0, 0, ctx).value - s1.value - g1.value +
                 (psi_r + g) * g - factorial_d(r);
    err += ghr.err + s1.err + g1.err;
    for (int j = 1; j <= r - 1; ++j) rhs -= harmonic_d(j) / j;
    for (int j = 1; j <= r - 1; ++j) {
      const double w = stirling_first(r, j).convert_to<double>();
      const double Hr1 = harmonic_d(r - 1);
      double blk = 0.5 * (r + 3 - j) * riemann_zeta(r + 2.0 - j, 0, ctx).value;
      for (int v = 1; v <= r - j - 1; ++v)
        blk -= 0.5 * riemann_zeta(r + 1.0 - j - v, 0, ctx).value *
               riemann_zeta(v + 1.0, 0, ctx).value;
      const double srj = ((r - j) % 2 == 0) ? 1.0 : -1.0;
      for (int v = 2; v <= r - j; ++v) {
        const double sv = (v % 2 == 0) ? 1.0 : -1.0;
        blk -= sv * riemann_zeta(r + 2.0 - j - v, 0, ctx).value *
               (harmonic_d(r - 1, v) + srj / (v - 1.0));
      }
      blk += Hr1 / (r - j);
      double hv = 0.0;
      for (int v = 1; v <= r - 1; ++v)
        hv += harmonic_d(v) / std::pow(static_cast<double>(v), r + 1 - j);
      Real srp = sigma(r + 1 - j, ctx).value;
      blk += srj * (srp.value - riemann_zeta(r + 1.0 - j, 1, ctx).value + hv);
      err += srp.err;
      blk -= static_cast<double>(r) / (r + 1 - j);
      rhs -= w * blk;
    }
    for (int j = 0; j <= r - 1; ++j) {
      const double w = stirling_first(r, j).convert_to<double>();
      if (w == 0.0) continue;
      rhs -= w * ((1.0 - (r - j) * psi_r) / ((r - j) * (r - j)) +
                  static_cast<double>(j) / (r + 1 - j));
    }
    // subtract known lower-index integrals: j = 2..r contribute I_{r+1-j}
    for (int j = 2; j <= r; ++j)
      rhs -= stirling_first(r, j).convert_to<double>() *
             I[static_cast<size_t>(r + 1 - j)];
    I[static_cast<size_t>(r)] = rhs / factorial_d(r - 1);
  }
  return Real{I[static_cast<size_t>(p)], err + 1e-12};
}

}  // namespace hhz
