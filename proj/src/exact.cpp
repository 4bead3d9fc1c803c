#include "ytensor/exact.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace ytensor {
namespace {

/// Running quotient of two integer products, reduced by gcd as it grows so
/// that the operands stay close to the size of the final answer.
class ExactQuotient {
 public:
  void multiply(std::int64_t num_factor, std::int64_t den_factor) {
    num_ *= static_cast<long>(num_factor);
    den_ *= static_cast<long>(den_factor);
    if (++pending_ == kReduceEvery) reduce();
  }

  mpz_class finish() {
    reduce();
    if (den_ != 1) throw std::logic_error("quotient is not integral");
    return num_;
  }

 private:
  static constexpr int kReduceEvery = 32;

  void reduce() {
    pending_ = 0;
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
      mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
  }

  mpz_class num_ = 1;
  mpz_class den_ = 1;
  int pending_ = 0;
};

mpz_class power(std::int64_t base, std::int64_t exponent) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exponent));
  return r;
}

}  // namespace

mpz_class factorial(std::int64_t n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class dim_sym(const Partition& lambda) {
  ExactQuotient q;
  std::int64_t k = 0;
  for (const Cell& cell : lambda.cells()) q.multiply(++k, hook_length(lambda, cell));
  return q.finish();
}

mpz_class dim_gl(const Partition& lambda, std::int64_t N) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  if (lambda.height() > N) return 0;
  ExactQuotient q;
  for (const Cell& cell : lambda.cells())
    q.multiply(shifted_content(lambda, N, cell), hook_length(lambda, cell));
  return q.finish();
}

mpz_class dim_iso(const Partition& lambda, std::int64_t N) { return dim_sym(lambda) * dim_gl(lambda, N); }

ExactDims exact_dims(const Partition& lambda, std::int64_t N) {
  ExactDims d;
  d.dim_sym = dim_sym(lambda);
  d.dim_gl = dim_gl(lambda, N);
  d.dim_iso = d.dim_sym * d.dim_gl;
  return d;
}

ExactMeasure plancherel(const Partition& lambda) {
  const mpz_class d = dim_sym(lambda);
  mpq_class value(d * d, factorial(lambda.size()));
  value.canonicalize();
  return {value, MeasureKind::Plancherel, lambda.size(), 0};
}

ExactMeasure schur_weyl_measure(const Partition& lambda, std::int64_t N) {
  mpq_class value(dim_iso(lambda, N), power(N, lambda.size()));
  value.canonicalize();
  return {value, MeasureKind::SchurWeyl, lambda.size(), N};
}

mpq_class schur_weyl_via_plancherel(const Partition& lambda, std::int64_t N) {
  mpq_class value = plancherel(lambda).value;
  for (const Cell& cell : lambda.cells()) {
    mpq_class factor(N + content(cell), N);
    factor.canonicalize();
    value *= factor;
  }
  return value;
}

BigFloat neg_log_measure_scaled(const Partition& lambda, std::int64_t N, unsigned digits10) {
  const mpz_class num = dim_iso(lambda, N);
  if (num == 0) throw std::domain_error("measure is zero; log undefined");
  const unsigned work = digits10 + 10;
  const BigFloat ln_num = log(BigFloat(num, work));
  const BigFloat ln_den = log(BigFloat(power(N, lambda.size()), work));
  const BigFloat root_n = sqrt_of(static_cast<unsigned long>(lambda.size()), work);
  BigFloat out = ln_den - ln_num;
  mpfr_div(out.get(), out.get(), root_n.get(), MPFR_RNDN);
  return out;
}

DiagramEnumerator::DiagramEnumerator(int n, int N) : n_(n), N_(N) {
  if (n < 1 || N < 1) throw std::invalid_argument("enumeration needs n >= 1 and N >= 1");
}

std::optional<Partition> DiagramEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    parts_ = {n_};
  } else if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return Partition(parts_);
}

bool DiagramEnumerator::advance() {
  // Rightmost part that can be decremented with the remainder still fitting
  // into the remaining slots using parts no larger than the decremented one.
  int tail = 0;
  for (int i = static_cast<int>(parts_.size()) - 1; i >= 0; --i) {
    const int v = parts_[static_cast<std::size_t>(i)] - 1;
    const long remainder = tail + 1;
    const long slots = N_ - i - 1;
    tail += parts_[static_cast<std::size_t>(i)];
    if (v < 1 || remainder > static_cast<long>(v) * slots) continue;
    parts_.resize(static_cast<std::size_t>(i) + 1);
    parts_.back() = v;
    long left = remainder;
    while (left > 0) {
      const int take = static_cast<int>(std::min<long>(v, left));
      parts_.push_back(take);
      left -= take;
    }
    return true;
  }
  return false;
}

std::vector<Partition> enumerate_diagrams(int n, int N) {
  std::vector<Partition> out;
  DiagramEnumerator e(n, N);
  while (auto p = e.next()) out.push_back(std::move(*p));
  return out;
}

std::vector<mpz_class> partition_counts(int n) {
  if (n < 0) throw std::invalid_argument("partition_count needs n >= 0");
  std::vector<mpz_class> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    mpz_class acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const int g2 = k * (3 * k + 1) / 2;
      const bool plus = (k % 2) == 1;
      if (plus) acc += p[static_cast<std::size_t>(m - g1)];
      else acc -= p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) {
        if (plus) acc += p[static_cast<std::size_t>(m - g2)];
        else acc -= p[static_cast<std::size_t>(m - g2)];
      }
    }
    p[static_cast<std::size_t>(m)] = std::move(acc);
  }
  return p;
}

mpz_class partition_count(int n) { return partition_counts(n).back(); }

mpz_class write_enumeration_csv(std::ostream& os, int n, int N) {
  os << "partition,dim_sym,dim_gl,dim_iso,measure_num,measure_den\n";
  mpz_class total = 0;
  const mpz_class denom = power(N, n);
  DiagramEnumerator e(n, N);
  while (auto lambda = e.next()) {
    const ExactDims d = exact_dims(*lambda, N);
    mpq_class m(d.dim_iso, denom);
    m.canonicalize();
    os << '"' << lambda->to_string() << "\"," << d.dim_sym.get_str() << ',' << d.dim_gl.get_str() << ','
       << d.dim_iso.get_str() << ',' << m.get_num().get_str() << ',' << m.get_den().get_str() << '\n';
    total += d.dim_iso;
  }
  return total;
}

}  // namespace ytensor
