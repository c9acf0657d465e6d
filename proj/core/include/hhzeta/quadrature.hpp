#pragma once

#include "hhzeta/types.hpp"

#include <cmath>
#include <functional>
#include <queue>
#include <vector>

namespace hhz {

struct QuadResult {
  double value = 0.0;
  double err = 0.0;
  int panels = 0;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1].
inline constexpr double kGK15Nodes[15] = {
    -0.991455371120812639206854697526329,
    -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926,
    -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730,
    -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245,
    0.0,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};

inline constexpr double kGK15WeightsK[15] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

// Gauss weights apply to the odd-index Kronrod nodes (the 7-point rule).
inline constexpr double kGK15WeightsG[7] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

struct Panel {
  double a, b, value, err;
  bool operator<(const Panel& o) const { return err < o.err; }
};

inline Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double k15 = 0.0, g7 = 0.0;
  for (int i = 0; i < 15; ++i) {
    const double fx = f(c + h * kGK15Nodes[i]);
    k15 += kGK15WeightsK[i] * fx;
    if (i % 2 == 1) g7 += kGK15WeightsG[i / 2] * fx;
  }
  k15 *= h;
  g7 *= h;
  const double diff = std::abs(k15 - g7);
  // QUADPACK-style sharpened error estimate.
  const double err = diff == 0.0 ? 0.0 : diff * std::min(1.0, std::pow(200.0 * diff / std::max(std::abs(k15), 1e-300), 1.5));
  return {a, b, k15, std::max(err, std::abs(k15) * 1e-16)};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration on a finite interval.
inline QuadResult integrate(const std::function<double(double)>& f, double a,
                            double b, const QuadSettings& q = {}) {
  std::priority_queue<detail::Panel> heap;
  detail::Panel p0 = detail::gk15(f, a, b);
  double total = p0.value, toterr = p0.err;
  heap.push(p0);
  int panels = 1;
  while (toterr > q.panel_tol && panels < q.max_subdivisions) {
    detail::Panel p = heap.top();
    heap.pop();
    const double mid = 0.5 * (p.a + p.b);
    detail::Panel l = detail::gk15(f, p.a, mid);
    detail::Panel r = detail::gk15(f, mid, p.b);
    total += l.value + r.value - p.value;
    toterr += l.err + r.err - p.err;
    heap.push(l);
    heap.push(r);
    ++panels;
  }
  return {total, toterr, panels};
}

/// Integral over [a, inf) of a function decaying at least geometrically.
/// Doubling segments are summed until a segment contributes below tol.
inline QuadResult integrate_to_inf(const std::function<double(double)>& f,
                                   double a, const QuadSettings& q = {},
                                   double tol = 1e-13) {
  double lo = a;
  double width = std::max(1.0, std::abs(a));
  QuadResult acc;
  for (int seg = 0; seg < 200; ++seg) {
    QuadSettings qs = q;
    qs.panel_tol = tol / 4.0;
    QuadResult r = integrate(f, lo, lo + width, qs);
    acc.value += r.value;
    acc.err += r.err;
    acc.panels += r.panels;
    lo += width;
    width *= 2.0;
    if (std::abs(r.value) < tol && seg > 2) break;
  }
  return acc;
}

}  // namespace hhz
