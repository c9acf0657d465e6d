#pragma once

#include "hhzeta/smooth_sum.hpp"
#include "hhzeta/types.hpp"

#include <vector>

namespace hhz {

/// Exact hyperharmonic number by the defining recursion, h_n^(0) = 1/n.
/// Memoized up to configurable bounds (default n <= 10^4, r <= 8).
Rational hh_exact(long n, int r);

/// Closed form n^(rising r)/(n Gamma(r)) (H_{n+r-1} - psi(r) - gamma), r >= 1.
Real hh_closed(long n, int r, const EvalContext& ctx = {});

/// Analytic extension x^(rising r)/(x Gamma(r)) (psi(x+r) - psi(r)) for x > 0.
/// r = 0 returns 1/x by convention.
Real hh_analytic(double x, int r, const EvalContext& ctx = {});

/// One-step order recurrence h_n^(r+1) = (1 + n/r) h_n^(r) - n/(r(n+r)) binom(n+r, r).
Rational hh_step(long n, int r);

/// Streaming h_k^(r) as doubles: next() yields h_1^(r), h_2^(r), ...
/// O(r) work per step via the column of order-j values at the current k.
class HyperharmonicStream {
 public:
  explicit HyperharmonicStream(int r);
  double next();
  long index() const { return k_; }

 private:
  std::vector<long double> col_;  // col_[j] = h_k^(j)
  long k_ = 0;
};

/// Smooth large-x model of h_x^(r) ln(x)^m / x^r as a log-power sum
/// (shift 0, orders 1..kmax). The order-1 part is exactly
/// (ln^{m+1}x - psi(r) ln^m x)/(x Gamma(r)); higher orders carry the
/// asymptotic corrections. r = 0 gives ln^m x / x exactly.
SmoothLogSum hh_log_model(int r, int m, int kmax);

}  // namespace hhz
