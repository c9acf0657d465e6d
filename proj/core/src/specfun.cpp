#include "hhzeta/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace hhz {

namespace {

bool near_nonpositive_integer(double x) {
  return x <= 0.5 && std::abs(x - std::round(x)) < 1e-300;
}

}  // namespace

Real rising_factorial(double x, int r) {
  if (r < 0) throw domain_error("rising_factorial: r must be >= 0");
  double p = 1.0;
  for (int i = 0; i < r; ++i) p *= (x + i);
  return Real{p, std::abs(p) * 1e-15 * r};
}

BigInt stirling_first(int r, int j) {
  if (r < 0 || j < 0) throw domain_error("stirling_first: negative index");
  if (j > r) throw domain_error("stirling_first: j > r");
  // [r+1 j] = [r j-1] + r [r j], [0 0] = 1.
  static std::vector<std::vector<BigInt>> table{{BigInt(1)}};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= r) {
    const int n = static_cast<int>(table.size());  // building row n
    const auto& prev = table.back();
    std::vector<BigInt> row(static_cast<size_t>(n) + 1);
    row[0] = 0;
    for (int q = 1; q <= n; ++q) {
      BigInt v = prev[static_cast<size_t>(q) - 1];
      if (q < n) v += BigInt(n - 1) * prev[static_cast<size_t>(q)];
      row[static_cast<size_t>(q)] = v;
    }
    table.push_back(std::move(row));
  }
  return table[static_cast<size_t>(r)][static_cast<size_t>(j)];
}

Rational harmonic(long n, int v) {
  if (v < 1) throw domain_error("harmonic: v must be >= 1");
  Rational acc = 0;
  for (long k = 1; k <= n; ++k) {
    BigInt kv = 1;
    for (int i = 0; i < v; ++i) kv *= k;
    acc += Rational(1, kv);
  }
  return acc;
}

double harmonic_d(long n, int v) {
  if (n < 0) return 0.0;
  static std::vector<std::vector<double>> cache;  // cache[v] = prefix sums
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (static_cast<int>(cache.size()) <= v) cache.resize(static_cast<size_t>(v) + 1);
  auto& pref = cache[static_cast<size_t>(v)];
  if (pref.empty()) pref.push_back(0.0);
  while (static_cast<long>(pref.size()) <= n) {
    const double k = static_cast<double>(pref.size());
    pref.push_back(pref.back() + std::pow(k, -v));
  }
  return pref[static_cast<size_t>(n)];
}

Real digamma(double x, const EvalContext& ctx) {
  (void)ctx;
  if (near_nonpositive_integer(x))
    throw pole_error("digamma: pole at non-positive integer");
  // Shift to x >= 12, then asymptotic series.
  double acc = 0.0;
  while (x < 12.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x, inv2 = inv * inv;
  // psi(x) ~ ln x - 1/(2x) - sum B_2j/(2j x^2j)
  static const double c[7] = {1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240,
                              1.0 / 132, -691.0 / 32760, 1.0 / 12};
  double series = 0.0, p = inv2;
  for (int j = 0; j < 7; ++j) {
    series += c[j] * p;
    p *= inv2;
  }
  const double val = acc + std::log(x) - 0.5 * inv - series;
  return Real{val, std::abs(val) * 1e-15 + 1e-16};
}

Real gamma_fn(double x, const EvalContext& ctx) {
  (void)ctx;
  if (near_nonpositive_integer(x))
    throw pole_error("gamma_fn: pole at non-positive integer");
  if (x > 0 && x == std::floor(x) && x <= 21.0) {
    double f = 1.0;
    for (int i = 2; i < static_cast<int>(x); ++i) f *= i;
    return Real{f, 0.0};
  }
  const double v = std::tgamma(x);
  return Real{v, std::abs(v) * 4e-16};
}

Jet hurwitz_zeta_jet(double s0, double a, int order, const EvalContext& ctx) {
  if (a <= 0) throw domain_error("hurwitz_zeta_jet: a must be > 0");
  if (std::abs(s0 - 1.0) < 1e-14) throw pole_error("hurwitz_zeta_jet: s = 1");
  // zeta(s,a) = sum_{i<N} (a+i)^-s + (a+N)^(1-s)/(s-1) + (a+N)^-s/2
  //           + sum_q B_2q/(2q)! (a+N)^(-s-2q+1) prod_{t=0}^{2q-2}(s+t)
  // evaluated in jet arithmetic to carry s-derivatives.
  // Small head for s < 0: the head and boundary terms grow like (a+N)^(1-s)
  // and cancel, so a large N costs absolute accuracy there.
  const int N = s0 >= 0.0 ? 48 : 12;
  // EM order: enough terms that the first dropped correction is negligible,
  // including negative s where convergence requires 2K > 1 - s.
  int K = std::max(ctx.em_order, static_cast<int>(std::ceil((1.0 - s0) / 2.0)) + 4);
  K = std::min(K, 30);
  const Jet s = Jet::variable(s0, order);
  Jet acc = Jet::constant(0.0, order);
  for (int i = 0; i < N; ++i) acc = acc + Jet::pow(a + i, -1.0 * s);
  const double X = a + N;
  acc = acc + Jet::pow(X, Jet::constant(1.0, order) - s) / (s - 1.0);
  acc = acc + 0.5 * Jet::pow(X, -1.0 * s);
  Jet prod = Jet::constant(1.0, order);  // prod (s+t), t = 0..2q-2
  double fact = 1.0;                     // (2q)!
  double lastmag = 1e300;
  for (int q = 1; q <= K; ++q) {
    if (q == 1)
      prod = s;
    else
      prod = prod * (s + (2.0 * q - 3.0)) * (s + (2.0 * q - 2.0));
    fact *= (2.0 * q - 1.0) * (2.0 * q);
    const double B = static_cast<double>(bernoulli_number(2 * q).convert_to<double>());
    Jet term = (B / fact) * prod * Jet::pow(X, -1.0 * s - (2.0 * q - 1.0));
    acc = acc + term;
    const double mag = std::abs(term[0]);
    if (mag > lastmag && q > 4) break;  // asymptotic series turned
    lastmag = mag;
  }
  return acc;
}

Real riemann_zeta(double s, int m, const EvalContext& ctx) {
  if (std::abs(s - 1.0) < 1e-12) throw pole_error("riemann_zeta: pole at s = 1");
  Jet z = hurwitz_zeta_jet(s, 1.0, m, ctx);
  const double v = z.derivative(m);
  return Real{v, std::abs(v) * 1e-14 + 1e-15};
}

Rational bernoulli_number(int n) {
  if (n < 0) throw domain_error("bernoulli_number: negative index");
  if (n > 64) throw domain_error("bernoulli_number: cached up to 64");
  // sum_{k=0}^{n} binom(n+1, k) B_k = 0 for n >= 1.
  static std::vector<Rational> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) cache.push_back(Rational(1));
  while (static_cast<int>(cache.size()) <= n) {
    const int q = static_cast<int>(cache.size());
    Rational acc = 0;
    BigInt b = 1;  // binom(q+1, k)
    for (int k = 0; k < q; ++k) {
      acc += Rational(b) * cache[static_cast<size_t>(k)];
      b = b * (q + 1 - k) / (k + 1);
    }
    cache.push_back(-acc / Rational(q + 1));
  }
  return cache[static_cast<size_t>(n)];
}

std::vector<Rational> bernoulli_poly(int k) {
  // B_k(x) = sum_j binom(k, j) B_{k-j} x^j
  std::vector<Rational> c(static_cast<size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) {
    BigInt b = 1;
    for (int i = 0; i < j; ++i) b = b * (k - i) / (i + 1);
    c[static_cast<size_t>(j)] = Rational(b) * bernoulli_number(k - j);
  }
  return c;
}

Real bernoulli_periodic(int k, double x) {
  if (k < 1) throw domain_error("bernoulli_periodic: k must be >= 1");
  double u = x - std::floor(x);
  const auto c = bernoulli_poly(k);
  double acc = 0.0;
  for (int j = k; j >= 0; --j)
    acc = acc * u + c[static_cast<size_t>(j)].convert_to<double>();
  return Real{acc, 1e-15 * (k + 1)};
}

Real harmonic_asym(long n, int k) {
  if (n < 1) throw domain_error("harmonic_asym: n must be >= 1");
  if (k < 1) throw domain_error("harmonic_asym: k must be >= 1");
  const double nd = static_cast<double>(n);
  double acc = std::log(nd) + kEulerGamma + 0.5 / nd;
  for (int m = 1; m <= k; ++m) {
    // zeta(1-2m) = -B_2m/(2m)
    const double z = -(bernoulli_number(2 * m) / Rational(2 * m)).convert_to<double>();
    acc += z * std::pow(nd, -2 * m);
  }
  // Dropped term is an integral against P_{2k+1}(x)/x^{2k+2}; bound it by
  // sup|P_{2k+1}| * int_n^inf x^-(2k+2) dx with sup|P_q| <= 2 q! zeta(q)/(2pi)^q.
  double fact = 1.0;
  for (int i = 2; i <= 2 * k + 1; ++i) fact *= i;
  double zq = 1.0;  // zeta(2k+1), crude upper bound via 1 + 2^-(2k+1)*3
  zq = 1.0 + 3.0 * std::pow(2.0, -(2.0 * k + 1.0));
  const double supP = 2.0 * fact * zq / std::pow(2.0 * M_PI, 2.0 * k + 1.0);
  const double bound = supP / (2.0 * k + 1.0) * std::pow(nd, -(2.0 * k + 1.0));
  return Real{acc, bound};
}

}  // namespace hhz
