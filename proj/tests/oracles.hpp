#pragma once

// Independent reference computations used only by the tests.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "ytensor/partition.hpp"
#include "ytensor/profile.hpp"
#include "ytensor/quadrature.hpp"

namespace oracle {

/// Standard Young tableaux of shape lambda by removing corners recursively.
inline mpz_class count_syt(std::vector<int> rows) {
  static std::map<std::vector<int>, mpz_class> memo;
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  if (rows.empty()) return 1;
  if (auto it = memo.find(rows); it != memo.end()) return it->second;
  mpz_class total = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i + 1 < rows.size() && rows[i + 1] == rows[i]) continue;
    auto smaller = rows;
    --smaller[i];
    total += count_syt(smaller);
  }
  memo[rows] = total;
  return total;
}

/// Semistandard tableaux with entries in [1, N], filled cell by cell.
inline std::int64_t count_ssyt(const std::vector<int>& rows, int N) {
  std::vector<std::vector<int>> t;
  for (int r : rows) t.emplace_back(static_cast<std::size_t>(r), 0);
  std::function<std::int64_t(std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t j) -> std::int64_t {
    if (i == t.size()) return 1;
    if (j == t[i].size()) return fill(i + 1, 0);
    std::int64_t total = 0;
    const int lo = std::max(j > 0 ? t[i][j - 1] : 1, i > 0 ? t[i - 1][j] + 1 : 1);
    for (int v = lo; v <= N; ++v) {
      t[i][j] = v;
      total += fill(i, j + 1);
    }
    return total;
  };
  return fill(0, 0);
}

/// Hook of (i, j) by walking the diagram cell by cell.
inline int hook_by_walk(const ytensor::Partition& lambda, int i, int j) {
  int count = 1;
  for (int jj = j + 1; lambda.contains({i, jj}); ++jj) ++count;
  for (int ii = i + 1; lambda.contains({ii, j}); ++ii) ++count;
  return count;
}

/// p(n) by coin-change dynamic programming over part sizes.
inline std::vector<mpz_class> partitions_dp(int n) {
  std::vector<mpz_class> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int total = part; total <= n; ++total)
      p[static_cast<std::size_t>(total)] += p[static_cast<std::size_t>(total - part)];
  return p;
}

/// m(x) = 3 - (1+x)^2 ln(1 + 1/x) - (x-1)^2 ln(1 - 1/x) for x >= 1.
inline double m_closed(double x) {
  const double tail = x == 1 ? 0.0 : (x - 1) * (x - 1) * std::log1p(-1 / x);
  return 3 - (1 + x) * (1 + x) * std::log1p(1 / x) - tail;
}

/// (ln n! - n ln n + n)/sqrt(n).
inline double epsilon(std::int64_t n) {
  const double x = static_cast<double>(n);
  return (std::lgamma(x + 1) - x * std::log(x) + x) / std::sqrt(x);
}

/// rho by adaptive Gauss-Kronrod on each unit grid interval of the profile.
inline double rho_by_quadrature(const ytensor::Profile& L, double c) {
  ytensor::QuadratureConfig q;
  q.abs_tol = 1e-13;
  q.rel_tol = 1e-13;
  double total = 0.0;
  auto f = [&](double s) { return std::log1p(2 * c * s) * (L(s) - std::abs(s)); };
  for (int k = L.left_index(); k < L.right_index(); ++k)
    total += ytensor::gauss_kronrod(f, k * L.step(), (k + 1) * L.step(), q).value;
  return 2 * total;
}

/// theta = 1 + 2 double integral over t < s of ln(2(s - t)) (1 - L'(s)) (1 + L'(t)),
/// by nested Gauss-Kronrod over pairs of unit grid intervals.
inline double theta_by_quadrature(const ytensor::Profile& L) {
  ytensor::QuadratureConfig q;
  q.abs_tol = 1e-12;
  q.rel_tol = 1e-12;
  q.max_subdivisions = 20000;
  const auto& slopes = L.slopes();
  const double h = L.step();
  double total = 0.0;
  for (std::size_t a = 0; a < slopes.size(); ++a) {
    if (slopes[a] != 1) continue;
    for (std::size_t d = a + 1; d < slopes.size(); ++d) {
      if (slopes[d] != -1) continue;
      const double t0 = (L.left_index() + static_cast<int>(a)) * h;
      const double s0 = (L.left_index() + static_cast<int>(d)) * h;
      auto outer = [&](double s) {
        auto inner = [&](double t) { return std::log(2 * (s - t)); };
        return ytensor::gauss_kronrod(inner, t0, t0 + h, q).value;
      };
      total += 4 * ytensor::gauss_kronrod(outer, s0, s0 + h, q).value;
    }
  }
  return 1 + 2 * total;
}

}  // namespace oracle
