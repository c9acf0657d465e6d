#pragma once

#include "hhzeta/types.hpp"

namespace hhz {

/// Digamma kernel K(t) = 1/t - 1/(1 - e^-t); series near 0, K(0+) = -1/2.
Real kernel(double t);

/// E_s^m(t) = (1/m!) int_1^inf e^{-xt} x^{-s} ln^m x dx.
/// t = 0 is accepted for s > 1 (value 1/(s-1)^{m+1}).
Real exp_integral(double s, int m, double t, const EvalContext& ctx = {});

/// int_0^inf K(t) E_p^m(t) dt by adaptive quadrature with certified
/// endpoint truncations.
Real kernel_E_integral(int p, int m, const EvalContext& ctx = {});

/// Same integral for m = 0 via the closed-form triangular system.
Real kernel_E_closed(int p, const EvalContext& ctx = {});

}  // namespace hhz
