#pragma once

#include "hhzeta/types.hpp"

#include <cmath>
#include <map>
#include <utility>
#include <vector>

namespace hhz {

/// Exact polynomial in the symbols L_p = ln(p) for primes p, with rational
/// coefficients. Logarithms of integers are expanded through their prime
/// factorization, so rearrangement identities that only use
/// ln(ab) = ln a + ln b cancel coefficient-by-coefficient.
class LogPoly {
 public:
  using Mono = std::vector<std::pair<int, int>>;  // sorted (prime, exponent)

  LogPoly() = default;

  static LogPoly constant(const Rational& c) {
    LogPoly p;
    if (c != 0) p.terms_[Mono{}] = c;
    return p;
  }

  /// ln(n) as a sum of prime-log symbols; ln(1) = 0.
  static LogPoly log_of_int(long n) {
    LogPoly p;
    long rem = n;
    for (long q = 2; q * q <= rem; ++q)
      while (rem % q == 0) {
        p.add_mono(Mono{{static_cast<int>(q), 1}}, 1);
        rem /= q;
      }
    if (rem > 1) p.add_mono(Mono{{static_cast<int>(rem), 1}}, 1);
    return p;
  }

  void add_mono(const Mono& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LogPoly& add_scaled(const LogPoly& o, const Rational& c) {
    for (const auto& [m, v] : o.terms_) add_mono(m, v * c);
    return *this;
  }

  friend LogPoly operator*(const LogPoly& a, const LogPoly& b) {
    LogPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Mono m = ma;
        for (const auto& [p, e] : mb) {
          bool found = false;
          for (auto& [mp, me] : m)
            if (mp == p) {
              me += e;
              found = true;
              break;
            }
          if (!found) m.emplace_back(p, e);
        }
        std::sort(m.begin(), m.end());
        r.add_mono(m, ca * cb);
      }
    return r;
  }

  LogPoly pow(int k) const {
    LogPoly r = constant(1);
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  /// Largest coefficient magnitude, as a double.
  double max_coeff() const {
    double mx = 0.0;
    for (const auto& [m, c] : terms_)
      mx = std::max(mx, std::abs(c.convert_to<double>()));
    return mx;
  }

  double eval() const {
    double acc = 0.0;
    for (const auto& [m, c] : terms_) {
      double t = c.convert_to<double>();
      for (const auto& [p, e] : m) t *= std::pow(std::log(static_cast<double>(p)), e);
      acc += t;
    }
    return acc;
  }

 private:
  std::map<Mono, Rational> terms_;
};

}  // namespace hhz
