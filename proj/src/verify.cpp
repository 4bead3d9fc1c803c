#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include "ytensor/harness.hpp"
#include "ytensor/parallel.hpp"
#include "ytensor/rng.hpp"
#include "ytensor/rsk.hpp"

namespace ytensor {
namespace {

using Records = std::vector<CheckRecord>;
using nlohmann::json;

constexpr double kPi = std::numbers::pi;

/// Diagrams from P_N^n with fewer than N rows, in trial order.
std::vector<Partition> samples_below_rank(int n, int N, std::size_t count, std::uint64_t seed) {
  std::vector<Partition> out;
  for (std::uint64_t stream = 0; out.size() < count; ++stream) {
    auto lambda = sample_schur_weyl_one(n, N, seed, stream);
    if (lambda.height() < N) out.push_back(std::move(lambda));
  }
  return out;
}

Records sums() {
  Records out;
  for (int n = 1; n <= 8; ++n) {
    mpz_class sym_sq = 0;
    for (const auto& lambda : enumerate_diagrams(n, n)) sym_sq += dim_sym(lambda) * dim_sym(lambda);
    out.push_back(make_check("sum_dim_sym_sq", {{"n", n}}, sym_sq.get_d(), factorial(n).get_d(), 0.0));
    for (int N = 1; N <= 5; ++N) {
      mpz_class iso = 0;
      mpq_class total = 0;
      std::int64_t mismatches = 0;
      for (const auto& lambda : enumerate_diagrams(n, N)) {
        iso += dim_iso(lambda, N);
        const mpq_class direct = schur_weyl_measure(lambda, N).value;
        total += direct;
        if (direct != schur_weyl_via_plancherel(lambda, N)) ++mismatches;
      }
      mpz_class power;
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(n));
      const json params = {{"n", n}, {"N", N}};
      out.push_back(make_check("sum_dim_iso", params, iso.get_d(), power.get_d(), 0.0));
      out.push_back(make_check("measure_total", params, total.get_d(), 1.0, 0.0));
      out.push_back(make_check("schur_weyl_factorization", params, static_cast<double>(mismatches), 0.0, 0.0));
    }
  }
  return out;
}

Records sampler(const VerifyOptions& o) {
  Records out;
  for (auto [n, N] : {std::pair{4, 2}, std::pair{5, 3}}) {
    const auto gof = schur_weyl_gof(n, N, 20000, o.seed, 1);
    out.push_back(make_check("sampler_chi_square", {{"n", n}, {"N", N}, {"samples", 20000}, {"dof", gof.dof}},
                             gof.p_value, 1e-3, 0.0, Relation::AtLeast));
  }
  return out;
}

Records prop31(const VerifyOptions& o) {
  Records out;
  const int n = 400;
  const int N = 20;
  const double eps = (std::lgamma(n + 1.0) - n * std::log(double(n)) + n) / std::sqrt(double(n));
  double reference = 0.0;
  for (std::uint64_t k = 0; k < 5; ++k) {
    const auto lambda = sample_schur_weyl_one(n, N, o.seed, k);
    const auto r = prop31_decompose(lambda, N, o.quad);
    if (k == 0) reference = r.residual;
    const json params = {{"n", n}, {"N", N}, {"partition", lambda.to_string()}};
    out.push_back(make_check("prop31_lambda_independence", params, r.residual, reference, 1e-6));
    out.push_back(make_check("prop31_epsilon", params, r.residual, eps, 1e-8));
    out.push_back(make_check("hat_inequality", params, r.theta_hat, r.rho_hat, 0.0, Relation::AtLeast));
  }
  const auto trivial = prop31_decompose(Partition({1}), 1, o.quad);
  out.push_back(make_check("prop31_trivial", {{"n", 1}, {"N", 1}, {"quantity", "lhs"}}, trivial.lhs, 0.0, 1e-15));
  out.push_back(make_check("prop31_trivial", {{"n", 1}, {"N", 1}, {"quantity", "residual"}}, trivial.residual, 1.0, 1e-9));
  return out;
}

Records prop41(const VerifyOptions& o) {
  Records out;
  const int n = 400;
  const int N = 25;
  auto diagrams = samples_below_rank(n, N, 4, o.seed);
  std::vector<int> hook(24, 1);
  hook[0] = n - 23;
  diagrams.push_back(Partition({n}));
  diagrams.push_back(Partition(hook));
  diagrams.push_back(Partition({200, 200}));
  for (const auto& lambda : diagrams) {
    const auto id = prop41_identity(Profile(lambda), N, o.quad, o.h_prime_offset);
    const json params = {{"n", n}, {"N", N}, {"partition", lambda.to_string()}};
    out.push_back(make_check("prop41_identity", params, id.lhs, id.rhs, 1e-5));
    out.push_back(make_check("h_term_sign", params, id.h_term, 0.0, 1e-9, Relation::AtLeast));
  }
  for (double c : {0.5, 2.0}) {
    const auto id = prop41_identity_shape(ShapeParam(c), o.quad);
    out.push_back(make_check("prop41_shape", {{"c", c}, {"side", "lhs"}}, id.lhs, 0.0, 1e-6));
    out.push_back(make_check("prop41_shape", {{"c", c}, {"side", "rhs"}}, id.rhs, 0.0, 1e-6));
  }
  return out;
}

Records positivity(const VerifyOptions& o) {
  Records out;
  const int n = 400;
  const int N = 20;
  const double c = std::sqrt(double(n)) / N;
  for (std::uint64_t k = 0; k < 10; ++k) {
    const auto lambda = sample_schur_weyl_one(n, N, o.seed + 1, k);
    const Profile profile(lambda);
    const double theta = theta_profile(profile);
    const double rho = rho_profile(profile, c);
    const json params = {{"n", n}, {"N", N}, {"partition", lambda.to_string()}};
    out.push_back(make_check("cor42_positivity", params, theta - rho, 0.0, 1e-9, Relation::AtLeast));
    const double quad_rho = rho_quadrature(
        [&](double s) { return profile(s); },
        [&] {
          std::vector<double> pts;
          for (int j : profile.corner_indices()) pts.push_back(j * profile.step());
          return pts;
        }(),
        c, o.quad);
    out.push_back(make_check("rho_closed_form", params, rho, quad_rho, 1e-9));
    const auto w = default_window(c, profile);
    out.push_back(make_check("theta_corner_vs_window", params, theta, theta_window(derivative_of(profile, w), o.quad), 1e-9));
  }
  for (double c : {0.0, 0.5, 1.0, 2.0}) {
    const ShapeParam p(c);
    out.push_back(make_check("theta_shape_minimizer", {{"c", c}}, theta_shape(p, o.quad) - rho_shape(p, o.quad), 0.0, 1e-6));
  }
  return out;
}

Records sobolev(const VerifyOptions& o) {
  Records out;
  for (auto [lambda, N] : {std::pair{Partition({1}), 1}, std::pair{Partition({2, 1}), 2}, std::pair{Partition({3, 1, 1}), 2}}) {
    const double c = std::sqrt(double(lambda.size())) / N;
    const auto routes = sobolev_routes(Profile(lambda), ShapeParam(c), o.quad);
    out.push_back(make_check("sobolev_routes", {{"partition", lambda.to_string()}, {"N", N}}, routes.difference_quotient,
                             routes.log_kernel, 1e-6));
  }
  return out;
}

Records lemmas(const VerifyOptions& o) {
  Records out;
  for (double c : o.c_grid) {
    if (!(c > 0)) continue;
    const ShapeParam p(c);
    const auto a = lemma_A(p, o.quad);
    out.push_back(make_check("lemma_A", {{"c", c}}, a.quadrature, a.closed_form, 1e-8));
    const Window w = default_window(c);
    for (double s : {c / 2, c / 2 + 1.3, c / 2 - 1.2, c / 2 + 0.4}) {
      const auto i = lemma_I(p, s, w, o.quad);
      out.push_back(make_check("lemma_I", {{"c", c}, {"s", i.point}}, i.quadrature, i.closed_form, 1e-7));
    }
    for (double x : {0.0, 1.0, -p.alpha(), 1.7, -2.5}) {
      const auto f = lemma_F3(p, x, o.quad);
      out.push_back(make_check("lemma_F3", {{"c", c}, {"x", x}}, f.quadrature, f.closed_form, 1e-7));
    }
    for (const Window win : {w, Window{-2.2, 3.1}}) {
      const auto io = lemma_intIOmega(p, win, o.quad);
      out.push_back(make_check("lemma_intIOmega", {{"c", c}, {"a", win.a}, {"b", win.b}}, io.quadrature, io.closed_form, 1e-6));
    }
  }
  return out;
}

Records series_and_constants(const VerifyOptions& o) {
  Records out;
  for (double z : {0.1, 0.3, 0.5}) {
    const double lhs = -3 + (1 + 1 / z) * (1 + 1 / z) * std::log1p(z) + (1 / z - 1) * (1 / z - 1) * std::log1p(-z);
    out.push_back(make_check("power_series", {{"z", z}}, lhs, -m_series(1 / z), 1e-10));
  }
  out.push_back(make_check("m_at_one", json::object(), m_integer(1), 3 - 4 * std::log(2.0), 1e-10));
  for (int n = 1; n <= 10; ++n) {
    for (int N = 1; N <= 6; ++N) {
      double worst = std::numeric_limits<double>::infinity();
      for (const auto& lambda : enumerate_diagrams(n, N)) worst = std::min(worst, theta_hat(lambda) - rho_hat(lambda, N));
      out.push_back(make_check("hook_content_inequality", {{"n", n}, {"N", N}}, worst, 0.0, 0.0, Relation::AtLeast));
    }
  }
  const double beta = beta_constant();
  out.push_back(make_check("beta_value", json::object(), beta * beta, 4 * kPi * kPi / 6, 1e-12));
  out.push_back(make_check("alpha_zero", json::object(), alpha_constant(ShapeParam(0), o.quad), 2 / kPi - 4 / (kPi * kPi), 1e-10));
  for (double c : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const double alpha = alpha_constant(ShapeParam(c), o.quad);
    out.push_back(make_check("alpha_positive", {{"c", c}}, alpha, 0.0, 0.0, Relation::AtLeast));
    out.push_back(make_check("alpha_below_beta", {{"c", c}}, alpha, beta, 0.0, Relation::AtMost));
  }
  out.push_back(make_check("partition_count", {{"n", 100}}, partition_count(100).get_d(), 190569292.0, 0.0));
  const auto counts = partition_counts(10000);
  auto gap = [&](int n) {
    // ln p(n) from the exact integer, without going through a double.
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, counts[static_cast<std::size_t>(n)].get_mpz_t());
    return std::abs((std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0)) / std::sqrt(double(n)) - beta);
  };
  for (int n : {1000, 10000})
    out.push_back(make_check("hardy_ramanujan", {{"n", n}, {"previous_n", n / 10}}, gap(n), gap(n / 10), 0.0,
                             Relation::AtMost));
  return out;
}

Records shape_properties(const VerifyOptions& o) {
  Records out;
  for (double c : {0.0, 0.5, 1.0, 2.5}) {
    const ShapeParam p(c);
    std::vector<double> pts{p.curved_left(), p.curved_right(), 0.0};
    if (c > 0) pts.push_back(-0.5 / c);
    const auto grid = breakpoints_within(p.support_left(), p.support_right(), pts);
    const double area = integrate_pieces([&](double s) { return omega_c(p, s) - std::abs(s); }, grid, o.quad);
    out.push_back(make_check("shape_area", {{"c", c}}, area, 0.5, 1e-8));
  }
  return out;
}

/// Central differences with step 1e-5 at 20 random points per pair.
Records shape_derivatives(const VerifyOptions& o) {
  Records out;
  constexpr double h = 1e-5;
  auto fd = [&](auto&& f, double x) { return (f(x + h) - f(x - h)) / (2 * h); };
  SplitMix64 rng(o.seed, 99);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53); };
  auto record = [&](const std::string& pair, double c, auto&& derivative, auto&& function, double lo, double hi) {
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const double x = uniform(lo, hi);
      worst = std::max(worst, std::abs(fd(function, x) - derivative(x)));
    }
    out.push_back(make_check("shape_derivatives", {{"pair", pair}, {"c", c}}, worst, 0.0, 1e-6, Relation::AtMost));
  };
  for (double c : {0.0, 0.5, 2.0}) {
    const ShapeParam p(c);
    record("omega_c'", c, [&](double s) { return omega_c_prime(p, s); }, [&](double s) { return omega_c(p, s); },
           p.curved_left() + 0.01, p.curved_right() - 0.01);
    record("omega_c''", c, [&](double z) { return omega_c_second(p, z); },
           [&](double z) { return omega_c_prime(p, p.unshift(z)); }, -0.95, 0.95);
  }
  for (double c : {0.5, 0.7, 1.0, 2.0}) {
    const ShapeParam p(c);
    const double pole = -p.alpha();
    auto H = [&](double z) { return H_tilde(p, z); };
    auto Hp = [&](double z) { return H_tilde_prime(p, z); };
    auto Hpp = [&](double z) { return H_tilde_second(p, z); };
    auto J = [&](double z) { return J_tilde(p, z); };
    const double left_lo = c == 1 ? -4.0 : std::max(pole + 0.05, -4.0);
    // 0.05 away from z = +-1, where H~'' grows like (z^2 - 1)^(-1/2) and the
    // central-difference truncation error would dominate.
    const double left_hi = -1.05;
    for (auto [lo, hi] : {std::pair{1.05, 4.0}, std::pair{left_lo, left_hi}}) {
      if (!(hi > lo)) continue;
      record("H~'", c, Hp, H, lo, hi);
      record("H~''", c, Hpp, Hp, lo, hi);
      record("J~'", c, H, J, lo, hi);
    }
    if (c != 1 && pole < -1.06) {
      record("H~'", c, Hp, H, -4.0, pole - 0.05);
      record("H~''", c, Hpp, Hp, -4.0, pole - 0.05);
    }
    const double edge = -0.5 / c;
    record("G'", c, [&](double s) { return -std::log(std::abs(1 + 2 * c * s)); }, [&](double s) { return G(p, s); },
           edge + 0.05, edge + 3.0);
  }
  for (int k = 1; k <= 2; ++k) {
    record("phi_" + std::to_string(k) + "'", 0.0, [&](double x) { return phi(k - 1, x); },
           [&](double x) { return phi(k, x); }, 0.05, 3.0);
    record("phi_" + std::to_string(k) + "'", 0.0, [&](double x) { return phi(k - 1, x); },
           [&](double x) { return phi(k, x); }, -3.0, -0.05);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& required_coverage() {
  static const std::vector<std::string> names = {
      "sum_dim_sym_sq",   "sum_dim_iso",        "measure_total",      "schur_weyl_factorization",
      "sampler_chi_square", "prop31_lambda_independence", "prop31_epsilon", "prop31_trivial",
      "hat_inequality",   "prop41_identity",    "h_term_sign",        "prop41_shape",
      "cor42_positivity", "rho_closed_form",    "theta_corner_vs_window", "theta_shape_minimizer",
      "sobolev_routes",   "lemma_A",            "lemma_I",            "lemma_F3",
      "lemma_intIOmega",  "power_series",       "m_at_one",           "hook_content_inequality",
      "beta_value",       "alpha_zero",         "alpha_positive",     "alpha_below_beta",
      "partition_count",  "hardy_ramanujan",    "shape_area",         "shape_derivatives"};
  return names;
}

VerifyReport cmd_verify_all(const VerifyOptions& options) {
  options.quad.validate();
  const std::vector<std::function<Records()>> suites = {
      [] { return sums(); },
      [&] { return sampler(options); },
      [&] { return prop31(options); },
      [&] { return prop41(options); },
      [&] { return positivity(options); },
      [&] { return sobolev(options); },
      [&] { return lemmas(options); },
      [&] { return series_and_constants(options); },
      [&] { return shape_properties(options); },
      [&] { return shape_derivatives(options); },
  };
  std::vector<Records> results(suites.size());
  parallel_for(suites.size(), options.workers, [&](std::size_t k) { results[k] = suites[k](); });
  VerifyReport report;
  for (auto& part : results)
    for (auto& rec : part) report.records.push_back(std::move(rec));
  report.pass = !report.records.empty();
  for (const auto& rec : report.records) report.pass = report.pass && rec.pass;
  std::map<std::string, int> seen;
  for (const auto& rec : report.records) ++seen[rec.test];
  for (const auto& name : required_coverage())
    if (!seen.count(name)) report.pass = false;
  return report;
}

nlohmann::json verify_report_json(const VerifyReport& report) {
  json records = json::array();
  std::map<std::string, int> seen;
  int failures = 0;
  for (const auto& rec : report.records) {
    records.push_back(check_to_json(rec));
    ++seen[rec.test];
    if (!rec.pass) ++failures;
  }
  json coverage = json::object();
  json missing = json::array();
  for (const auto& name : required_coverage()) {
    coverage[name] = seen.count(name) ? seen[name] : 0;
    if (!seen.count(name)) missing.push_back(name);
  }
  return {{"records", records}, {"coverage", coverage}, {"missing", missing}, {"failures", failures}, {"pass", report.pass}};
}

}  // namespace ytensor
