#include "hhzeta/hyperharm.hpp"

#include "hhzeta/specfun.hpp"

#include <cmath>
#include <mutex>

namespace hhz {

namespace {

constexpr long kMemoMaxN = 10000;
constexpr int kMemoMaxR = 8;

std::vector<std::vector<Rational>>& memo_rows() {
  static std::vector<std::vector<Rational>> rows;
  return rows;
}
std::mutex& memo_mutex() {
  static std::mutex mu;
  return mu;
}

// Extends the cached prefix rows so rows[r] has at least n entries.
void extend_rows(long n, int r) {
  auto& rows = memo_rows();
  if (static_cast<int>(rows.size()) <= r) rows.resize(static_cast<size_t>(r) + 1);
  for (int j = 0; j <= r; ++j) {
    auto& row = rows[static_cast<size_t>(j)];
    while (static_cast<long>(row.size()) < n) {
      const long k = static_cast<long>(row.size()) + 1;
      if (j == 0) {
        row.emplace_back(Rational(1, k));
      } else {
        Rational v = rows[static_cast<size_t>(j) - 1][static_cast<size_t>(k) - 1];
        if (k > 1) v += row.back();
        row.push_back(std::move(v));
      }
    }
  }
}

}  // namespace

Rational hh_exact(long n, int r) {
  if (n < 1) throw domain_error("hh_exact: n must be >= 1");
  if (r < 0) throw domain_error("hh_exact: r must be >= 0");
  if (n <= kMemoMaxN && r <= kMemoMaxR) {
    std::lock_guard<std::mutex> lock(memo_mutex());
    extend_rows(n, r);
    return memo_rows()[static_cast<size_t>(r)][static_cast<size_t>(n) - 1];
  }
  // Out-of-memo fallback: column sweep without caching.
  std::vector<Rational> col(static_cast<size_t>(r) + 1);  // col[j] = h_k^(j)
  for (long k = 1; k <= n; ++k) {
    col[0] = Rational(1, k);
    for (int j = 1; j <= r; ++j)
      col[static_cast<size_t>(j)] += col[static_cast<size_t>(j) - 1];
  }
  return col[static_cast<size_t>(r)];
}

Rational hh_step(long n, int r) {
  if (r < 1) throw domain_error("hh_step: r must be >= 1");
  const Rational h = hh_exact(n, r);
  BigInt binom = 1;  // binom(n+r, r)
  for (int i = 1; i <= r; ++i) binom = binom * (n + i) / i;
  return (Rational(1) + Rational(n, r)) * h -
         Rational(n) / (Rational(r) * (n + r)) * Rational(binom);
}

Real hh_closed(long n, int r, const EvalContext& ctx) {
  (void)ctx;
  if (r < 1) throw domain_error("hh_closed: r must be >= 1 (use hh_exact for r=0)");
  // psi(r) + gamma = H_{r-1} exactly for integer r.
  const double factor = harmonic_d(n + r - 1) - harmonic_d(r - 1);
  const double rf = rising_factorial(static_cast<double>(n), r).value;
  double g = 1.0;
  for (int i = 2; i < r; ++i) g *= i;
  const double v = rf / (static_cast<double>(n) * g) * factor;
  return Real{v, std::abs(v) * 2e-14};
}

Real hh_analytic(double x, int r, const EvalContext& ctx) {
  if (x <= 0) throw domain_error("hh_analytic: x must be > 0");
  if (r == 0) return Real{1.0 / x, 1e-16 / x};
  const double psi_r = harmonic_d(r - 1) - kEulerGamma;
  const double factor = digamma(x + r, ctx).value - psi_r;
  const double rf = rising_factorial(x, r).value;
  double g = 1.0;
  for (int i = 2; i < r; ++i) g *= i;
  const double v = rf / (x * g) * factor;
  return Real{v, std::abs(v) * 1e-13 + 1e-15};
}

HyperharmonicStream::HyperharmonicStream(int r)
    : col_(static_cast<size_t>(r) + 1, 0.0L) {}

double HyperharmonicStream::next() {
  ++k_;
  col_[0] = 1.0L / static_cast<long double>(k_);
  for (size_t j = 1; j < col_.size(); ++j) col_[j] += col_[j - 1];
  return static_cast<double>(col_.back());
}

SmoothLogSum hh_log_model(int r, int m, int kmax) {
  if (r == 0) {
    SmoothLogSum s;
    s.add_term(1, m, 1.0);
    return s;
  }
  // h_x^(r)/x^r = (1/Gamma(r)) prod_{i=1}^{r-1}(1+i/x) (psi(x+r) - psi(r)) / x
  SmoothLogSum prod = SmoothLogSum::one();
  for (int i = 1; i < r; ++i) {
    SmoothLogSum f = SmoothLogSum::one();
    f.add_term(1, 0, static_cast<double>(i));
    prod = prod.mul(f, kmax);
  }
  const double psi_r = harmonic_d(r - 1) - kEulerGamma;
  // psi(x+r) = ln x + ln(1+r/x) - (1/2)(x+r)^-1 - sum_j B_2j/(2j) (x+r)^-2j
  SmoothLogSum psi;
  psi.add_term(0, 1, 1.0);
  psi += log1p_over_x_series(static_cast<double>(r), kmax);
  psi.add_term(0, 0, -psi_r);
  {
    SmoothLogSum inv1 = binomial_over_x_series(static_cast<double>(r), -1.0, kmax - 1);
    SmoothLogSum x1;
    x1.add_term(1, 0, -0.5);
    psi += inv1.mul(x1, kmax);
  }
  for (int j = 1; 2 * j <= kmax; ++j) {
    const double B = bernoulli_number(2 * j).convert_to<double>();
    SmoothLogSum invw =
        binomial_over_x_series(static_cast<double>(r), -2.0 * j, kmax - 2 * j);
    SmoothLogSum xw;
    xw.add_term(2 * j, 0, -B / (2.0 * j));
    psi += invw.mul(xw, kmax);
  }
  SmoothLogSum core = prod.mul(psi, kmax - 1);
  double g = 1.0;
  for (int i = 2; i < r; ++i) g *= i;
  // multiply by ln^m x / x and divide by Gamma(r)
  SmoothLogSum out;
  for (const auto& [key, c] : core.terms())
    out.add_term(key.first + 1, key.second + m, c / g);
  return out;
}

}  // namespace hhz
