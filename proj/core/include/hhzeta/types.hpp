#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace hhz {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Euler-Mascheroni constant, correctly rounded double.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243104;

/// A real value paired with a non-negative absolute error estimate.
struct Real {
  double value = 0.0;
  double err = 0.0;

  Real() = default;
  Real(double v, double e) : value(v), err(std::abs(e)) {}
  explicit Real(double v) : value(v), err(0.0) {}
};

inline Real operator+(const Real& a, const Real& b) {
  return {a.value + b.value, a.err + b.err};
}
inline Real operator-(const Real& a, const Real& b) {
  return {a.value - b.value, a.err + b.err};
}
inline Real operator*(double c, const Real& a) {
  return {c * a.value, std::abs(c) * a.err};
}
inline Real operator*(const Real& a, double c) { return c * a; }
inline Real operator+(const Real& a, double c) { return {a.value + c, a.err}; }
inline Real operator-(const Real& a, double c) { return {a.value - c, a.err}; }

struct QuadSettings {
  int max_subdivisions = 4000;  // adaptive panel cap per integral
  double panel_tol = 1e-12;     // absolute tolerance split across panels
};

/// Shared evaluation knobs: target tolerance, series truncation length,
/// Euler-Maclaurin correction order, quadrature settings.
struct EvalContext {
  double tol = 1e-10;
  long n_terms = 100000;
  int em_order = 4;
  QuadSettings quad;
};

struct domain_error : std::domain_error {
  explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

struct pole_error : domain_error {
  explicit pole_error(const std::string& msg) : domain_error(msg) {}
};

struct divergence_error : domain_error {
  explicit divergence_error(const std::string& msg) : domain_error(msg) {}
};

struct accuracy_error : std::runtime_error {
  double best_effort;
  accuracy_error(const std::string& msg, double value)
      : std::runtime_error(msg), best_effort(value) {}
};

}  // namespace hhz
