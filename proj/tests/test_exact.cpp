#include <doctest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "ytensor/exact.hpp"

using namespace ytensor;

TEST_CASE("dim_sym") {
  CHECK(dim_sym(Partition({7})) == 1);
  CHECK(dim_sym(Partition({2, 1})) == 2);
  CHECK(dim_sym(Partition({2, 2})) == 2);
  for (int n = 1; n <= 9; ++n)
    for (const auto& lambda : enumerate_diagrams(n, n)) CHECK(dim_sym(lambda) == oracle::count_syt(lambda.rows()));
}

TEST_CASE("dim_gl") {
  CHECK(dim_gl(Partition({2, 1}), 2) == 2);
  CHECK(dim_gl(Partition({1, 1, 1}), 2) == 0);
  CHECK(dim_gl(Partition({2, 2, 1, 1}), 3) == 0);
  CHECK_THROWS_AS(dim_gl(Partition({1}), 0), std::invalid_argument);
  for (int N = 1; N <= 6; ++N)
    for (int n = 1; n <= 7; ++n) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(N + n - 1), static_cast<unsigned long>(n));
      CHECK(dim_gl(Partition({n}), N) == binom);
    }
  for (int N = 1; N <= 4; ++N)
    for (int n = 1; n <= 6; ++n)
      for (const auto& lambda : enumerate_diagrams(n, N))
        CHECK(dim_gl(lambda, N) == oracle::count_ssyt(lambda.rows(), N));
}

TEST_CASE("dim_iso on Y_2^3") {
  CHECK(dim_iso(Partition({3}), 2) == 4);
  CHECK(dim_iso(Partition({2, 1}), 2) == 4);
  CHECK(dim_iso(Partition({1, 1, 1}), 2) == 0);
  const auto d = exact_dims(Partition({3, 2}), 3);
  CHECK(d.dim_iso == d.dim_sym * d.dim_gl);
}

TEST_CASE("measures") {
  CHECK(plancherel(Partition({1})).value == 1);
  CHECK(plancherel(Partition({2, 1})).value == mpq_class(2, 3));
  CHECK(plancherel(Partition({2})).value == mpq_class(1, 2));
  CHECK(plancherel(Partition({1, 1})).value == mpq_class(1, 2));
  CHECK(schur_weyl_measure(Partition({3}), 2).value == mpq_class(1, 2));
  CHECK(schur_weyl_measure(Partition({1, 1, 1}), 2).value == 0);
  CHECK(schur_weyl_measure(Partition({3}), 2).kind == MeasureKind::SchurWeyl);
}

TEST_CASE("sum identities") {
  for (int n = 1; n <= 12; ++n) {
    mpz_class total = 0;
    for (const auto& lambda : enumerate_diagrams(n, n)) total += dim_sym(lambda) * dim_sym(lambda);
    CHECK(total == factorial(n));
  }
  for (int n = 1; n <= 10; ++n)
    for (int N = 1; N <= 6; ++N) {
      mpz_class total = 0;
      mpq_class mass = 0;
      for (const auto& lambda : enumerate_diagrams(n, N)) {
        total += dim_iso(lambda, N);
        const auto m = schur_weyl_measure(lambda, N).value;
        CHECK(m == schur_weyl_via_plancherel(lambda, N));
        mass += m;
      }
      mpz_class power;
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(n));
      CHECK(total == power);
      CHECK(mass == 1);
    }
}

TEST_CASE("product formula when N >= n includes every diagram") {
  for (const auto& lambda : enumerate_diagrams(6, 6))
    CHECK(schur_weyl_measure(lambda, 9).value == schur_weyl_via_plancherel(lambda, 9));
}

TEST_CASE("scaled negative log measure") {
  CHECK(neg_log_measure_scaled(Partition({1}), 1).to_double() == 0.0);
  CHECK(neg_log_measure_scaled(Partition({3}), 2).to_double() == doctest::Approx(std::log(2.0) / std::sqrt(3.0)).epsilon(1e-15));
  CHECK_THROWS_AS(neg_log_measure_scaled(Partition({1, 1, 1}), 2), std::domain_error);

  SUBCASE("round trip to the exact rational") {
    const Partition lambda({5, 3, 2, 2});
    const int N = 4;
    const auto value = neg_log_measure_scaled(lambda, N, 60);
    const auto exact = schur_weyl_measure(lambda, N).value;
    BigFloat back(60);
    mpfr_mul(back.get(), value.get(), sqrt_of(12, 60).get(), MPFR_RNDN);
    back = exp(-back);
    const BigFloat rational = to_bigfloat(exact, 60);
    BigFloat rel = abs(back - rational);
    mpfr_div(rel.get(), rel.get(), rational.get(), MPFR_RNDN);
    CHECK(rel.to_double() < 1e-50);
  }
}

TEST_CASE("enumeration") {
  auto text = [](const std::vector<Partition>& v) {
    std::string s;
    for (const auto& p : v) s += "(" + p.to_string() + ")";
    return s;
  };
  CHECK(text(enumerate_diagrams(4, 2)) == "(4)(3,1)(2,2)");
  CHECK(text(enumerate_diagrams(3, 3)) == "(3)(2,1)(1,1,1)");
  CHECK(text(enumerate_diagrams(3, 7)) == "(3)(2,1)(1,1,1)");
  CHECK(text(enumerate_diagrams(5, 1)) == "(5)");
  CHECK_THROWS_AS(enumerate_diagrams(0, 2), std::invalid_argument);
  for (int n = 1; n <= 20; ++n) {
    const auto all = enumerate_diagrams(n, n);
    CHECK(all.size() == partition_count(n).get_ui());
    for (std::size_t k = 1; k < all.size(); ++k) CHECK(all[k].rows() < all[k - 1].rows());
  }
  for (const auto& lambda : enumerate_diagrams(30, 3)) CHECK(lambda.height() <= 3);
  CHECK(enumerate_diagrams(100, 2).size() == 51);
}

TEST_CASE("partition counts") {
  CHECK(partition_count(0) == 1);
  CHECK(partition_count(5) == 7);
  CHECK(partition_count(100) == 190569292);
  const auto dp = oracle::partitions_dp(400);
  const auto euler = partition_counts(400);
  for (std::size_t k = 0; k < dp.size(); ++k) CHECK(dp[k] == euler[k]);
}

TEST_CASE("ln p(n)/sqrt n approaches 2 pi/sqrt 6 monotonically") {
  const double beta = 2 * std::numbers::pi / std::sqrt(6.0);
  double previous = INFINITY;
  for (int n : {100, 1000, 10000, 100000}) {
    const mpz_class p = partition_count(n);
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, p.get_mpz_t());
    const double ratio = (std::log(mantissa) + exponent * std::log(2.0)) / std::sqrt(static_cast<double>(n));
    const double gap = std::abs(ratio - beta);
    CHECK(gap < previous);
    previous = gap;
  }
}

TEST_CASE("enumeration CSV") {
  std::ostringstream os;
  CHECK(write_enumeration_csv(os, 3, 2) == 8);
  CHECK(os.str() ==
        "partition,dim_sym,dim_gl,dim_iso,measure_num,measure_den\n"
        "\"3\",1,4,4,1,2\n"
        "\"2,1\",2,2,4,1,2\n");
}
