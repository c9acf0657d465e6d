#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace hhz {

/// Truncated Taylor series in one variable ("jet"), used to evaluate
/// s-derivatives of analytic expressions by propagating coefficients
/// f(s0), f'(s0), f''(s0)/2!, ... through arithmetic.
class Jet {
 public:
  // Jet of the variable itself: s0 + h.
  static Jet variable(double s0, int order) {
    Jet j(order);
    j.c_[0] = s0;
    if (order >= 1) j.c_[1] = 1.0;
    return j;
  }
  static Jet constant(double v, int order) {
    Jet j(order);
    j.c_[0] = v;
    return j;
  }

  explicit Jet(int order) : c_(static_cast<size_t>(order) + 1, 0.0) {}

  int order() const { return static_cast<int>(c_.size()) - 1; }
  double operator[](int k) const { return c_[static_cast<size_t>(k)]; }
  double& operator[](int k) { return c_[static_cast<size_t>(k)]; }

  /// m-th derivative value: m! * c_m.
  double derivative(int m) const {
    double f = 1.0;
    for (int i = 2; i <= m; ++i) f *= i;
    return c_[static_cast<size_t>(m)] * f;
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    Jet r(a.order());
    for (int k = 0; k <= a.order(); ++k) r[k] = a[k] + b[k];
    return r;
  }
  friend Jet operator-(const Jet& a, const Jet& b) {
    Jet r(a.order());
    for (int k = 0; k <= a.order(); ++k) r[k] = a[k] - b[k];
    return r;
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
      if (a[i] == 0.0) continue;
      for (int j = 0; i + j <= a.order(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
  }
  friend Jet operator*(double c, const Jet& a) {
    Jet r(a.order());
    for (int k = 0; k <= a.order(); ++k) r[k] = c * a[k];
    return r;
  }
  friend Jet operator+(const Jet& a, double c) {
    Jet r = a;
    r[0] += c;
    return r;
  }
  friend Jet operator-(const Jet& a, double c) {
    Jet r = a;
    r[0] -= c;
    return r;
  }
  friend Jet operator-(const Jet& a) { return -1.0 * a; }

  friend Jet operator/(const Jet& a, const Jet& b) {
    Jet q(a.order());
    for (int k = 0; k <= a.order(); ++k) {
      double acc = a[k];
      for (int i = 1; i <= k; ++i) acc -= b[i] * q[k - i];
      q[k] = acc / b[0];
    }
    return q;
  }

  friend Jet exp(const Jet& a) {
    Jet e(a.order());
    e[0] = std::exp(a[0]);
    for (int k = 1; k <= a.order(); ++k) {
      double acc = 0.0;
      for (int i = 1; i <= k; ++i) acc += i * a[i] * e[k - i];
      e[k] = acc / k;
    }
    return e;
  }

  /// b^e for a positive constant base b and jet exponent e.
  static Jet pow(double base, const Jet& e) { return exp(std::log(base) * e); }

 private:
  std::vector<double> c_;
};

}  // namespace hhz
