#pragma once

#include "hhzeta/types.hpp"

#include <cmath>
#include <map>
#include <utility>

namespace hhz {

namespace detail {
// B_2, B_4, ..., B_30 as doubles.
inline constexpr double kBern2j[15] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0};
}  // namespace detail

/// Finite combination of terms c * ln(x)^m * x^(-(shift+k)), closed under
/// differentiation and with closed-form tail integrals. Models the smooth
/// large-x behaviour of the summands handled by the tail routines below.
class SmoothLogSum {
 public:
  SmoothLogSum() = default;
  explicit SmoothLogSum(double shift) : shift_(shift) {}

  double shift() const { return shift_; }
  bool empty() const { return terms_.empty(); }

  void add_term(int k, int logpow, double coeff) {
    if (coeff == 0.0) return;
    terms_[{k, logpow}] += coeff;
  }

  static SmoothLogSum one() {
    SmoothLogSum s;
    s.add_term(0, 0, 1.0);
    return s;
  }

  SmoothLogSum& operator+=(const SmoothLogSum& o) {
    // Addition requires a common shift.
    if (terms_.empty()) shift_ = o.shift_;
    for (const auto& [key, c] : o.terms_) terms_[key] += c;
    return *this;
  }
  friend SmoothLogSum operator+(SmoothLogSum a, const SmoothLogSum& b) {
    return a += b;
  }
  friend SmoothLogSum operator*(double c, const SmoothLogSum& s) {
    SmoothLogSum r(s.shift_);
    for (const auto& [key, v] : s.terms_) r.terms_[key] = c * v;
    return r;
  }

  /// Product truncated at 1/x order kmax (relative to the combined shift).
  SmoothLogSum mul(const SmoothLogSum& o, int kmax) const {
    SmoothLogSum r(shift_ + o.shift_);
    for (const auto& [ka, ca] : terms_)
      for (const auto& [kb, cb] : o.terms_) {
        const int k = ka.first + kb.first;
        if (k > kmax) continue;
        r.add_term(k, ka.second + kb.second, ca * cb);
      }
    return r;
  }

  SmoothLogSum derivative() const {
    SmoothLogSum r(shift_);
    for (const auto& [key, c] : terms_) {
      const auto [k, m] = key;
      r.add_term(k + 1, m, -c * (shift_ + k));
      if (m > 0) r.add_term(k + 1, m - 1, c * m);
    }
    return r;
  }

  double eval(double x) const {
    const double lx = std::log(x);
    double acc = 0.0;
    for (const auto& [key, c] : terms_)
      acc += c * std::pow(lx, key.second) * std::pow(x, -(shift_ + key.first));
    return acc;
  }

  /// Integral over [N, inf) of all terms with exponent shift+k > 1.
  /// Throws if a non-integrable term is present.
  double tail_integral(double N) const {
    double acc = 0.0;
    for (const auto& [key, c] : terms_) {
      const double p = shift_ + key.first;
      if (p <= 1.0 + 1e-12)
        throw domain_error("tail_integral: non-integrable term x^-" +
                           std::to_string(p));
      acc += c * log_power_tail(key.second, p, N);
    }
    return acc;
  }

  /// Integral over [N, inf) of terms with k >= kmin only.
  double tail_integral_from_order(double N, int kmin) const {
    double acc = 0.0;
    for (const auto& [key, c] : terms_) {
      if (key.first < kmin) continue;
      const double p = shift_ + key.first;
      if (p <= 1.0 + 1e-12)
        throw domain_error("tail_integral_from_order: non-integrable term");
      acc += c * log_power_tail(key.second, p, N);
    }
    return acc;
  }

  /// Closed form of I(m,p,N) = int_N^inf ln(x)^m x^(-p) dx, p > 1.
  static double log_power_tail(int m, double p, double N) {
    // I(i) = N^(1-p) ln^i N / (p-1) + i/(p-1) * I(i-1)
    const double lnN = std::log(N);
    const double base = std::pow(N, 1.0 - p) / (p - 1.0);
    double I = base;
    for (int i = 1; i <= m; ++i) I = base * std::pow(lnN, i) + (i / (p - 1.0)) * I;
    return I;
  }

  /// Same term set reinterpreted with a different base shift.
  SmoothLogSum with_shift(double shift) const {
    SmoothLogSum r(shift);
    r.terms_ = terms_;
    return r;
  }

  const std::map<std::pair<int, int>, double>& terms() const { return terms_; }

 private:
  double shift_ = 0.0;
  std::map<std::pair<int, int>, double> terms_;
};

/// Series expansion of ln(1 + a/x) in powers of 1/x, truncated at order kmax.
inline SmoothLogSum log1p_over_x_series(double a, int kmax) {
  SmoothLogSum s;
  double ak = 1.0;
  for (int k = 1; k <= kmax; ++k) {
    ak *= a;
    s.add_term(k, 0, (k % 2 == 1 ? 1.0 : -1.0) * ak / k);
  }
  return s;
}

/// Series expansion of (1 + a/x)^alpha, truncated at order kmax.
inline SmoothLogSum binomial_over_x_series(double a, double alpha, int kmax) {
  SmoothLogSum s;
  double coeff = 1.0;
  s.add_term(0, 0, 1.0);
  for (int k = 1; k <= kmax; ++k) {
    coeff *= (alpha - (k - 1)) / k * a;
    s.add_term(k, 0, coeff);
  }
  return s;
}

/// Euler-Maclaurin estimate of sum_{n>N} f(n) for smooth monotone-tailed f.
/// Requires all terms integrable past N.
inline double em_tail(const SmoothLogSum& f, double N, int K) {
  double acc = f.tail_integral(N) - 0.5 * f.eval(N);
  SmoothLogSum d = f.derivative();
  double fact = 1.0;
  for (int j = 1; j <= K; ++j) {
    fact *= (2.0 * j - 1.0) * (2.0 * j);
    acc -= detail::kBern2j[j - 1] / fact * d.eval(N);
    if (j < K) {
      d = d.derivative();
      d = d.derivative();
    }
  }
  return acc;
}

/// lim_{X->inf} ( sum_{N<n<=X} f(n) - int_N^X f ) for smooth f whose
/// derivatives decay. Valid even when the integral itself diverges.
inline double lim_sum_minus_integral_tail(const SmoothLogSum& f, double N,
                                          int K) {
  double acc = -0.5 * f.eval(N);
  SmoothLogSum d = f.derivative();
  double fact = 1.0;
  for (int j = 1; j <= K; ++j) {
    fact *= (2.0 * j - 1.0) * (2.0 * j);
    acc -= detail::kBern2j[j - 1] / fact * d.eval(N);
    if (j < K) {
      d = d.derivative();
      d = d.derivative();
    }
  }
  return acc;
}

}  // namespace hhz
