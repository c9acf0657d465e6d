#pragma once

#include "hhzeta/jet.hpp"
#include "hhzeta/types.hpp"

#include <vector>

namespace hhz {

/// x(x+1)...(x+r-1); r = 0 gives the empty product 1.
Real rising_factorial(double x, int r);

/// Unsigned Stirling number of the first kind [r j]; exact, cached triangle.
BigInt stirling_first(int r, int j);

/// Exact generalized harmonic number H_n^(v) = sum_{k<=n} k^-v; H_0 = 0.
Rational harmonic(long n, int v);

/// H_n^(v) as a double, cached per v for repeated sweeps.
double harmonic_d(long n, int v = 1);

Real digamma(double x, const EvalContext& ctx = {});

Real gamma_fn(double x, const EvalContext& ctx = {});

/// m-th derivative of the Riemann zeta function at real s != 1.
Real riemann_zeta(double s, int m = 0, const EvalContext& ctx = {});

/// Jet of the Hurwitz zeta function s -> zeta(s, a) at s0, a > 0.
/// Euler-Maclaurin representation; valid for all real s0 != 1.
Jet hurwitz_zeta_jet(double s0, double a, int order, const EvalContext& ctx = {});

/// Exact Bernoulli number B_n (B_1 = -1/2), cached up to n = 64.
Rational bernoulli_number(int n);

/// Coefficients of the Bernoulli polynomial B_k(x), ascending powers.
std::vector<Rational> bernoulli_poly(int k);

/// Periodic extension P_k(x) = B_k(x - floor(x)).
Real bernoulli_periodic(int k, double x);

/// Truncated asymptotic ln n + gamma + 1/(2n) + sum_{m<=k} zeta(1-2m)/n^(2m).
/// err holds a rigorous bound on |value - H_n|.
Real harmonic_asym(long n, int k);

}  // namespace hhz
