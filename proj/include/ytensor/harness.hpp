#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ytensor/exact.hpp"
#include "ytensor/functionals.hpp"
#include "ytensor/partition.hpp"
#include "ytensor/profile.hpp"
#include "ytensor/shape.hpp"

namespace ytensor {

/// Parameters of one Monte Carlo experiment. Exactly one of N and c is set;
/// with c the rank is N = round(sqrt(n)/c), and c = 0 stands for the proxy
/// N = round(50 sqrt(n)) compared against Omega_0.
struct ExperimentConfig {
  int n = 0;
  std::optional<int> N;
  std::optional<double> c;
  std::size_t samples = 1;
  std::uint64_t seed = 1;
  double tol = 1e-6;
  double slack = 0.05;
  unsigned workers = 1;
  std::string out;
  std::string format = "csv";

  /// Throws std::invalid_argument when the invariants fail.
  void validate() const;
  int resolved_N() const;
  /// sqrt(n)/N, the value used in every formula.
  double realized_c() const;
  /// Shape the profiles are compared with: Omega_0 for the c = 0 proxy.
  ShapeParam target_shape() const;
};

/// Applies flat `key = value` lines (keys as the CLI flags, '#' comments)
/// on top of `base`. Throws std::invalid_argument on unknown keys.
ExperimentConfig parse_config_text(std::string_view text, ExperimentConfig base = {});
ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base = {});

struct Summary {
  std::size_t count = 0;
  double min = 0;
  double max = 0;
  double median = 0;
  double mean = 0;
  double stderr_mean = 0;
};

Summary summarize(std::span<const double> values);

struct ExperimentRecord {
  std::size_t trial = 0;
  std::string partition;
  double value = 0;
};

struct ExperimentResult {
  std::string name;
  int n = 0;
  int N = 0;
  double c = 0;
  std::uint64_t seed = 0;
  std::vector<ExperimentRecord> records;
  Summary summary;
  double lower = 0;  // declared open bounds on every value
  double upper = 0;
  double fraction_inside = 0;
  bool pass = false;
};

void write_result_csv(std::ostream& os, const ExperimentResult& result);
nlohmann::json result_to_json(const ExperimentResult& result);

/// -ln P_N^n(lambda)/sqrt(n) over P_N^n samples against (alpha_c - slack, beta).
ExperimentResult cmd_bounds(const ExperimentConfig& config);

/// sup_X |L(X) - Omega_c(X)| over the corners of L and the midpoints of a
/// 10^-3 grid covering both supports.
double sup_distance(const Profile& profile, const ShapeParam& c);

/// Sup-distance per sample; passes when the median is below config.tol.
ExperimentResult cmd_biane(const ExperimentConfig& config);

struct BianeSweep {
  std::vector<ExperimentResult> runs;
  bool decreasing = false;
  bool pass = false;  // decreasing medians and the last run passing its gate
};

/// One biane run per entry of `ns`, everything else taken from `config`.
BianeSweep cmd_biane_sweep(const ExperimentConfig& config, std::span<const int> ns);

struct DimsReport {
  Partition lambda;
  std::int64_t N = 0;
  ExactDims dims;
  mpq_class plancherel;
  mpq_class schur_weyl;
};

DimsReport cmd_dims(const Partition& lambda, std::int64_t N);
void write_dims(std::ostream& os, const DimsReport& report, std::string_view format);

inline constexpr int kEnumerationCap = 40;

/// Enumeration CSV followed by "# sum=<S> expected=<N^n> pass|fail".
/// Returns whether the sum matches. Throws std::invalid_argument for n > cap.
bool cmd_enumerate(std::ostream& os, int n, int N, int cap = kEnumerationCap);

/// CSV c,alpha_c,beta.
void cmd_constants(std::ostream& os, std::span<const double> cs, const QuadratureConfig& quad);

/// CSV s,omega_c,omega_c_prime on [from, to] with the given step.
void cmd_emit_shape(std::ostream& os, const ShapeParam& c, double from, double to, double step);

/// Chi-square goodness of fit; cells with expected count below 5 are pooled.
struct ChiSquare {
  double statistic = 0;
  int dof = 0;
  double p_value = 0;
};
ChiSquare chi_square_gof(std::span<const double> observed, std::span<const double> probabilities);

/// Samples `count` shapes from P_N^n and tests them against the exact law.
ChiSquare schur_weyl_gof(int n, int N, std::size_t count, std::uint64_t seed, unsigned workers);

enum class Relation { Equal, AtLeast, AtMost };

/// One verified identity or inequality: lhs = rhs (|lhs - rhs| <= tol),
/// lhs >= rhs - tol, or lhs <= rhs + tol.
struct CheckRecord {
  std::string test;
  nlohmann::json params;
  double lhs = 0;
  double rhs = 0;
  double tol = 0;
  Relation relation = Relation::Equal;
  double abs_err = 0;
  bool pass = false;
};

CheckRecord make_check(std::string test, nlohmann::json params, double lhs, double rhs, double tol,
                       Relation relation = Relation::Equal);
nlohmann::json check_to_json(const CheckRecord& record);

struct VerifyOptions {
  QuadratureConfig quad = tight_quadrature();
  std::vector<double> c_grid = {0.25, 0.5, 0.9, 1.0, 1.1, 2.0, 4.0};
  std::uint64_t seed = 20240601;
  unsigned workers = 1;
  /// Added to H~_c' inside the identity checks; nonzero only for fault injection.
  double h_prime_offset = 0.0;
};

struct VerifyReport {
  std::vector<CheckRecord> records;
  bool pass = false;
};

/// Suite names every full verification must exercise at least once.
const std::vector<std::string>& required_coverage();

VerifyReport cmd_verify_all(const VerifyOptions& options);

/// {"records": [...], "coverage": {suite: count}, "missing": [...], "pass": bool}.
nlohmann::json verify_report_json(const VerifyReport& report);

}  // namespace ytensor
