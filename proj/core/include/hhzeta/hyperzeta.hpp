#pragma once

#include "hhzeta/types.hpp"

#include <vector>

namespace hhz {

/// Laurent data of the hyperharmonic zeta function at its double pole s = r:
/// a_minus2/(s-r)^2 + a_minus1/(s-r) + sum_m (-1)^m gammas[m] (s-r)^m / m!.
struct LaurentData {
  int r = 0;
  Real a_minus2;
  Real a_minus1;
  std::vector<Real> gammas;
};

/// m-th s-derivative of sum_k h_k^(r) k^-s by direct summation with an
/// Euler-Maclaurin tail; requires s > r.
Real zh_series(int r, double s, int m, const EvalContext& ctx = {});

/// Meromorphic continuation of the hyperharmonic zeta function for real
/// s > r - 2k - 1 away from poles, assembled from zeta values, the
/// auxiliary double sum, and the certified remainder term.
Real zh_continued(int r, double s, int k, const EvalContext& ctx = {});

/// R(s,k,j) = sum_n n^-(s+1-j) int_n^inf P_{2k+1}(x) x^-(2k+2) dx,
/// with a certified tail bound in the returned error field.
Real remainder_R(double s, int k, int j, const EvalContext& ctx = {});

enum class AuxRoute { automatic, direct, expanded };

/// sum_n n^-q / (n+v). Direct route needs q > 0; the expanded route
/// continues to q > -M via Hurwitz zeta values, with poles at
/// non-positive integer q. v = 0 reduces to zeta(q+1).
Real aux_double_sum(double q, int v, const EvalContext& ctx = {},
                    AuxRoute route = AuxRoute::automatic);

/// m-th p-derivative of the shifted harmonic zeta sum_k H_{k+a} k^-p, p > 1.
Real zH_shifted(double p, int a, int m, const EvalContext& ctx = {});

/// Closed form of the shifted harmonic zeta for integer p >= 2.
/// The final sum runs to the shift a; see zH_shifted_closed_printed for the
/// as-printed variant kept for adjudication.
Real zH_shifted_closed(int p, int a, const EvalContext& ctx = {});

/// As-printed closed-form variant (final sum upper limit a+1). Differs from
/// the direct sum by H_{a+1}/(a+1)^p; retained as adjudication evidence only.
Real zH_shifted_closed_printed(int p, int a, const EvalContext& ctx = {});

/// Laurent data at s = r: principal part plus regular coefficients m <= M.
LaurentData laurent_data(int r, int M, const EvalContext& ctx = {});

}  // namespace hhz
