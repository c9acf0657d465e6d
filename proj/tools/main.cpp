// Command-line front end: constants, zeta values, identity verification,
// and tables, in text, JSON, or CSV.
#include "hhzeta/expint.hpp"
#include "hhzeta/hyperzeta.hpp"
#include "hhzeta/specfun.hpp"
#include "hhzeta/stieltjes.hpp"
#include "hhzeta/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

using json = nlohmann::json;
using namespace hhz;

namespace {

struct CliConfig {
  int precision_digits = 16;
  double tol = 1e-8;
  long terms = 100000;
  int em_order = 4;
  std::string format = "text";
};

EvalContext to_ctx(const CliConfig& c) {
  EvalContext ctx;
  ctx.tol = c.tol;
  ctx.n_terms = c.terms;
  ctx.em_order = c.em_order;
  return ctx;
}

std::string fmt_value(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

struct Row {
  std::string quantity;
  std::optional<long> r, m;
  std::string method;
  Real value;
  long terms = 0;
  json params;  // extra parameters for the JSON form
};

Row from_result(const ConstantResult& c) {
  Row row;
  row.quantity = to_string(c.kind);
  row.r = c.r;
  row.m = c.m;
  row.method = to_string(c.method);
  row.value = c.value;
  row.terms = c.terms_used;
  row.params = {{"r", c.r}, {"m", c.m}};
  return row;
}

void emit_rows(const std::vector<Row>& rows, const CliConfig& cfg) {
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& row : rows) {
      json params = row.params.is_null() ? json::object() : row.params;
      arr.push_back({{"quantity", row.quantity},
                     {"params", params},
                     {"method", row.method},
                     {"value", fmt_value(row.value.value, cfg.precision_digits)},
                     {"error_estimate", fmt_value(row.value.err, 3)},
                     {"terms_used", row.terms}});
    }
    std::printf("%s\n", arr.dump(2).c_str());
  } else if (cfg.format == "csv") {
    std::printf("quantity,r,m,method,value,error,terms\n");
    for (const auto& row : rows)
      std::printf("%s,%s,%s,%s,%s,%s,%ld\n", row.quantity.c_str(),
                  row.r ? std::to_string(*row.r).c_str() : "",
                  row.m ? std::to_string(*row.m).c_str() : "",
                  row.method.c_str(),
                  fmt_value(row.value.value, cfg.precision_digits).c_str(),
                  fmt_value(row.value.err, 3).c_str(), row.terms);
  } else {
    for (const auto& row : rows)
      std::printf("%-12s r=%-3s m=%-3s %-11s %-24s err=%-10s terms=%ld\n",
                  row.quantity.c_str(),
                  row.r ? std::to_string(*row.r).c_str() : "-",
                  row.m ? std::to_string(*row.m).c_str() : "-",
                  row.method.c_str(),
                  fmt_value(row.value.value, cfg.precision_digits).c_str(),
                  fmt_value(row.value.err, 3).c_str(), row.terms);
  }
}

int cmd_stieltjes(int r, int m, const std::string& method, const CliConfig& cfg) {
  EvalContext ctx = to_ctx(cfg);
  std::vector<ConstantResult> results;
  auto applicable = [&](const std::string& name) {
    return method == "all" || method == name;
  };
  try {
    if (applicable("limit")) results.push_back(gamma_hr_limit(r, m, ctx));
    if (applicable("recurrence")) {
      if (r >= 2)
        results.push_back(gamma_hr_recurrence(r, m, ctx));
      else if (method == "recurrence") {
        std::fprintf(stderr, "recurrence route requires r >= 2\n");
        return 2;
      }
    }
    if (applicable("closed")) {
      if (r >= 1 && m == 0)
        results.push_back(gamma_hr0_closed(r, ctx));
      else if (r >= 1 && m >= 1)
        results.push_back(gamma_hr_closed(r, m, ctx));
      else if (method == "closed") {
        std::fprintf(stderr, "closed route requires r >= 1\n");
        return 2;
      }
    }
  } catch (const domain_error& e) {
    std::fprintf(stderr, "invalid combination: %s\n", e.what());
    return 2;
  }
  if (results.empty()) {
    std::fprintf(stderr, "no applicable route\n");
    return 2;
  }
  std::vector<Row> rows;
  for (const auto& c : results) rows.push_back(from_result(c));
  if (method == "all" && results.size() > 1) {
    double maxd = 0.0;
    for (size_t i = 0; i < results.size(); ++i)
      for (size_t j = i + 1; j < results.size(); ++j)
        maxd = std::max(maxd, std::abs(results[i].value.value -
                                       results[j].value.value));
    Row d;
    d.quantity = "max_pairwise_diff";
    d.r = r;
    d.m = m;
    d.method = "all";
    d.value = Real{maxd, 0.0};
    d.params = {{"r", r}, {"m", m}};
    rows.push_back(d);
  }
  emit_rows(rows, cfg);
  for (const auto& c : results)
    if (c.best_effort) {
      std::fprintf(stderr, "tolerance not met on at least one route\n");
      return 1;
    }
  return 0;
}

int cmd_zeta(int r, double s, int deriv_m, const CliConfig& cfg) {
  EvalContext ctx = to_ctx(cfg);
  Real v;
  std::string method;
  try {
    if (r >= 1 && std::abs(s - r) < 1e-9) {
      std::fprintf(stderr, "pole of order 2 at s=%d\n", r);
      return 1;
    }
    if (r == 0) {
      if (std::abs(s) < 1e-9) {
        std::fprintf(stderr, "pole of order 1 at s=0\n");
        return 1;
      }
      v = (s > 0) ? zh_series(0, s, deriv_m, ctx)
                  : riemann_zeta(s + 1.0, deriv_m, ctx);
      method = (s > 0) ? "series" : "continuation";
    } else if (s > r) {
      v = zh_series(r, s, deriv_m, ctx);
      method = "series";
    } else {
      if (deriv_m > 0) {
        std::fprintf(stderr,
                     "derivatives are only available in the convergent "
                     "region s > r\n");
        return 2;
      }
      v = zh_continued(r, s, 3, ctx);
      method = "continuation";
    }
  } catch (const pole_error& e) {
    std::fprintf(stderr, "pole diagnostic: %s\n", e.what());
    return 1;
  } catch (const domain_error& e) {
    std::fprintf(stderr, "invalid arguments: %s\n", e.what());
    return 2;
  }
  Row row;
  row.quantity = "zeta_h";
  row.r = r;
  row.m = deriv_m;
  row.method = method;
  row.value = v;
  row.terms = 0;
  row.params = {{"r", r}, {"s", s}, {"deriv_m", deriv_m}};
  emit_rows({row}, cfg);
  return 0;
}

int cmd_verify(const std::string& suite, const CliConfig& cfg) {
  EvalContext ctx = to_ctx(cfg);
  std::vector<IdentityReport> reps;
  try {
    reps = run_suite(suite, ctx);
  } catch (const domain_error& e) {
    std::fprintf(stderr, "usage: %s\n", e.what());
    return 2;
  }
  bool all_pass = true;
  for (const auto& r : reps) all_pass = all_pass && r.pass;
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : reps)
      arr.push_back(
          {{"id", r.id},
           {"lhs", fmt_value(r.lhs.value, cfg.precision_digits)},
           {"rhs", fmt_value(r.rhs.value, cfg.precision_digits)},
           {"lhs_error", fmt_value(r.lhs.err, 3)},
           {"rhs_error", fmt_value(r.rhs.err, 3)},
           {"abs_diff", fmt_value(r.abs_diff, 3)},
           {"tol", fmt_value(r.tol, 3)},
           {"pass", r.pass},
           {"notes", r.notes}});
    std::printf("%s\n", arr.dump(2).c_str());
  } else if (cfg.format == "csv") {
    std::printf("id,lhs,rhs,abs_diff,tol,pass\n");
    for (const auto& r : reps)
      std::printf("%s,%s,%s,%s,%s,%d\n", r.id.c_str(),
                  fmt_value(r.lhs.value, cfg.precision_digits).c_str(),
                  fmt_value(r.rhs.value, cfg.precision_digits).c_str(),
                  fmt_value(r.abs_diff, 3).c_str(), fmt_value(r.tol, 3).c_str(),
                  r.pass ? 1 : 0);
  } else {
    for (const auto& r : reps)
      std::printf("%-44s %s  diff=%-10s tol=%-8s\n", r.id.c_str(),
                  r.pass ? "PASS" : "FAIL", fmt_value(r.abs_diff, 3).c_str(),
                  fmt_value(r.tol, 3).c_str());
    std::printf("%zu checks, %s\n", reps.size(),
                all_pass ? "all passed" : "FAILURES present");
  }
  return all_pass ? 0 : 1;
}

int cmd_table(const std::string& kind, int r_max, int m_max, int k_max,
              int p_max, const CliConfig& cfg) {
  EvalContext ctx = to_ctx(cfg);
  std::vector<Row> rows;
  if (kind == "gammas") {
    if (r_max < 0 || r_max > 6 || m_max < 0 || m_max > 5) {
      std::fprintf(stderr, "supported ranges: r <= 6, m <= 5\n");
      return 2;
    }
    for (int r = 0; r <= r_max; ++r)
      for (int m = 0; m <= m_max; ++m)
        rows.push_back(from_result(gamma_hr_limit(r, m, ctx)));
  } else if (kind == "sigmas") {
    if (k_max < 1 || k_max > 8) {
      std::fprintf(stderr, "supported range: k <= 8\n");
      return 2;
    }
    for (int k = 1; k <= k_max; ++k) {
      Row a;
      a.quantity = "sigma";
      a.r = k;
      a.method = "defining";
      a.value = sigma_defining(k, ctx);
      a.params = {{"k", k}};
      rows.push_back(a);
      Row b = a;
      b.method = "swap";
      b.value = sigma_swapped(k, ctx);
      rows.push_back(b);
    }
  } else if (kind == "integrals") {
    if (p_max < 1 || p_max > 6) {
      std::fprintf(stderr, "supported range: p <= 6\n");
      return 2;
    }
    for (int p = 1; p <= p_max; ++p) {
      Row a;
      a.quantity = "kernel_integral";
      a.r = p;
      a.method = "quadrature";
      a.value = kernel_E_integral(p, 0, ctx);
      a.params = {{"p", p}, {"m", 0}};
      rows.push_back(a);
      Row b = a;
      b.method = "closed";
      b.value = kernel_E_closed(p, ctx);
      rows.push_back(b);
    }
  } else {
    std::fprintf(stderr, "unknown table kind\n");
    return 2;
  }
  emit_rows(rows, cfg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperharmonic zeta functions and their Stieltjes constants"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global options after the subcommand name

  CliConfig cfg;
  app.add_option("--precision", cfg.precision_digits,
                 "significant digits in printed values")
      ->check(CLI::Range(10, 17));
  app.add_option("--tol", cfg.tol, "target tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--terms", cfg.terms, "series term budget");
  app.add_option("--em-order", cfg.em_order, "tail correction order");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  int r = 0, m = 0, deriv_m = 0;
  double s = 0.0;
  std::string method = "limit", suite = "all", kind;
  int r_max = 3, m_max = 2, k_max = 3, p_max = 3;

  auto* st = app.add_subcommand("stieltjes", "generalized Stieltjes constants");
  st->add_option("--r", r, "hyperharmonic order")->required();
  st->add_option("--m", m, "constant index")->required();
  st->add_option("--method", method, "route")
      ->check(CLI::IsMember({"limit", "recurrence", "closed", "all"}));

  auto* ze = app.add_subcommand("zeta", "hyperharmonic zeta values");
  ze->add_option("--r", r, "hyperharmonic order")->required();
  ze->add_option("--s", s, "argument")->required();
  ze->add_option("--deriv-m", deriv_m, "derivative order");

  auto* ve = app.add_subcommand("verify", "identity verification suite");
  ve->add_option("--suite", suite, "suite filter");

  auto* ta = app.add_subcommand("table", "tables of constants");
  ta->add_option("--kind", kind, "table kind")->required();
  ta->add_option("--r-max", r_max, "largest order");
  ta->add_option("--m-max", m_max, "largest index");
  ta->add_option("--k-max", k_max, "largest sigma index");
  ta->add_option("--p-max", p_max, "largest integral order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (st->parsed()) return cmd_stieltjes(r, m, method, cfg);
    if (ze->parsed()) return cmd_zeta(r, s, deriv_m, cfg);
    if (ve->parsed()) return cmd_verify(suite, cfg);
    if (ta->parsed()) return cmd_table(kind, r_max, m_max, k_max, p_max, cfg);
  } catch (const accuracy_error& e) {
    std::fprintf(stderr, "accuracy failure: %s\n", e.what());
    return 1;
  } catch (const domain_error& e) {
    std::fprintf(stderr, "invalid arguments: %s\n", e.what());
    return 2;
  }
  return 2;
}
