#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "ytensor/bigfloat.hpp"
#include "ytensor/partition.hpp"

namespace ytensor {

/// dim V_lambda (S_n), dim W_lambda (GL_N) and their product dim E_lambda.
struct ExactDims {
  mpz_class dim_sym;
  mpz_class dim_gl;
  mpz_class dim_iso;
};

enum class MeasureKind { Plancherel, SchurWeyl };

struct ExactMeasure {
  mpq_class value;
  MeasureKind kind = MeasureKind::Plancherel;
  std::int64_t n = 0;
  std::int64_t N = 0;  // 0 for Plancherel
};

/// n! / prod of hooks.
mpz_class dim_sym(const Partition& lambda);

/// prod (N + c_ij) / prod h_ij; zero when lambda has more than N rows.
mpz_class dim_gl(const Partition& lambda, std::int64_t N);

mpz_class dim_iso(const Partition& lambda, std::int64_t N);

ExactDims exact_dims(const Partition& lambda, std::int64_t N);

/// (dim V)^2 / n!
ExactMeasure plancherel(const Partition& lambda);

/// dim E / N^n
ExactMeasure schur_weyl_measure(const Partition& lambda, std::int64_t N);

/// Pl^n(lambda) * prod (1 + c_ij / N); must agree exactly with schur_weyl_measure.
mpq_class schur_weyl_via_plancherel(const Partition& lambda, std::int64_t N);

/// -ln(P_N^n(lambda)) / sqrt(n) from the exact integers.
/// Throws std::domain_error when the measure is zero.
BigFloat neg_log_measure_scaled(const Partition& lambda, std::int64_t N, unsigned digits10 = 50);

/// Partitions of n with at most N parts, lexicographically decreasing.
/// Iterative; yields one partition per call to next().
class DiagramEnumerator {
 public:
  DiagramEnumerator(int n, int N);
  std::optional<Partition> next();

 private:
  bool advance();

  int n_;
  int N_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> parts_;
};

std::vector<Partition> enumerate_diagrams(int n, int N);

/// p(n) by Euler's pentagonal-number recurrence.
mpz_class partition_count(int n);

/// p(0..n).
std::vector<mpz_class> partition_counts(int n);

/// CSV: partition,dim_sym,dim_gl,dim_iso,measure_num,measure_den.
/// Returns the sum of dim_iso over the enumerated diagrams.
mpz_class write_enumeration_csv(std::ostream& os, int n, int N);

mpz_class factorial(std::int64_t n);

}  // namespace ytensor
