#include "ytensor/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

#include "ytensor/format.hpp"
#include "ytensor/parallel.hpp"
#include "ytensor/rsk.hpp"

namespace ytensor {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("bad value for '" + std::string(key) + "': " + std::string(text));
  return value;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (N.has_value() == c.has_value()) throw std::invalid_argument("give exactly one of N and c");
  if (N && *N < 1) throw std::invalid_argument("N must be positive");
  if (c && !(*c >= 0 && std::isfinite(*c))) throw std::invalid_argument("c must be finite and >= 0");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  if (format != "csv" && format != "json") throw std::invalid_argument("format must be csv or json");
  if (resolved_N() < 1) throw std::invalid_argument("c too large: N would be 0");
}

int ExperimentConfig::resolved_N() const {
  if (N) return *N;
  const double root = std::sqrt(static_cast<double>(n));
  if (*c == 0) return static_cast<int>(std::lround(50 * root));
  return static_cast<int>(std::lround(root / *c));
}

double ExperimentConfig::realized_c() const {
  return std::sqrt(static_cast<double>(n)) / static_cast<double>(resolved_N());
}

ShapeParam ExperimentConfig::target_shape() const {
  if (c && *c == 0) return ShapeParam(0.0);
  return ShapeParam(realized_c());
}

ExperimentConfig parse_config_text(std::string_view text, ExperimentConfig base) {
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("config line without '=': " + std::string(line));
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "n") base.n = parse_number<int>(key, value);
    else if (key == "N") base.N = parse_number<int>(key, value);
    else if (key == "c") base.c = parse_number<double>(key, value);
    else if (key == "samples") base.samples = parse_number<std::size_t>(key, value);
    else if (key == "seed") base.seed = parse_number<std::uint64_t>(key, value);
    else if (key == "tol") base.tol = parse_number<double>(key, value);
    else if (key == "slack") base.slack = parse_number<double>(key, value);
    else if (key == "workers") base.workers = parse_number<unsigned>(key, value);
    else if (key == "out") base.out = std::string(value);
    else if (key == "format") base.format = std::string(value);
    else throw std::invalid_argument("unknown config key: " + std::string(key));
  }
  return base;
}

ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), std::move(base));
}

Summary summarize(std::span<const double> values) {
  Summary s;
  s.count = values.size();
  if (values.empty()) return s;
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  s.min = sorted.front();
  s.max = sorted.back();
  const std::size_t mid = sorted.size() / 2;
  s.median = sorted.size() % 2 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
  // Sum in trial order so the mean does not depend on sorting.
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stderr_mean = std::sqrt(ss / static_cast<double>(values.size() - 1) / static_cast<double>(values.size()));
  }
  return s;
}

void write_result_csv(std::ostream& os, const ExperimentResult& r) {
  os << "# experiment=" << r.name << " n=" << r.n << " N=" << r.N << " c=" << format_double(r.c)
     << " seed=" << r.seed << '\n';
  os << "trial,partition,value\n";
  for (const auto& rec : r.records)
    os << rec.trial << ",\"" << rec.partition << "\"," << format_double(rec.value) << '\n';
  const auto& s = r.summary;
  os << "# count=" << s.count << " min=" << format_double(s.min) << " max=" << format_double(s.max)
     << " median=" << format_double(s.median) << " mean=" << format_double(s.mean)
     << " stderr=" << format_double(s.stderr_mean) << '\n';
  os << "# lower=" << format_double(r.lower) << " upper=" << format_double(r.upper)
     << " fraction_inside=" << format_double(r.fraction_inside) << ' ' << (r.pass ? "pass" : "fail") << '\n';
}

nlohmann::json result_to_json(const ExperimentResult& r) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& rec : r.records)
    records.push_back({{"trial", rec.trial}, {"partition", rec.partition}, {"value", rec.value}});
  const auto& s = r.summary;
  return {{"experiment", r.name},
          {"n", r.n},
          {"N", r.N},
          {"c", r.c},
          {"seed", r.seed},
          {"records", records},
          {"summary",
           {{"count", s.count},
            {"min", s.min},
            {"max", s.max},
            {"median", s.median},
            {"mean", s.mean},
            {"stderr", s.stderr_mean}}},
          {"lower", r.lower},
          {"upper", r.upper},
          {"fraction_inside", r.fraction_inside},
          {"pass", r.pass}};
}

namespace {

template <class Value>
ExperimentResult run_samples(const std::string& name, const ExperimentConfig& config, Value&& value) {
  config.validate();
  ExperimentResult r;
  r.name = name;
  r.n = config.n;
  r.N = config.resolved_N();
  r.c = config.realized_c();
  r.seed = config.seed;
  const auto samples = sample_schur_weyl(r.n, r.N, config.seed, config.samples, config.workers);
  r.records.resize(samples.size());
  parallel_for(samples.size(), config.workers, [&](std::size_t k) {
    r.records[k] = {k, samples[k].to_string(), value(samples[k])};
  });
  std::vector<double> values;
  for (const auto& rec : r.records) values.push_back(rec.value);
  r.summary = summarize(values);
  return r;
}

void apply_bounds(ExperimentResult& r) {
  std::size_t inside = 0;
  for (const auto& rec : r.records)
    if (rec.value > r.lower && rec.value < r.upper) ++inside;
  r.fraction_inside = r.records.empty() ? 0.0 : static_cast<double>(inside) / static_cast<double>(r.records.size());
}

}  // namespace

ExperimentResult cmd_bounds(const ExperimentConfig& config) {
  const int N = (config.validate(), config.resolved_N());
  auto r = run_samples("bounds", config, [&](const Partition& lambda) {
    return neg_log_measure_scaled(lambda, N, 30).to_double();
  });
  r.lower = alpha_constant(ShapeParam(r.c), tight_quadrature()) - config.slack;
  r.upper = beta_constant();
  apply_bounds(r);
  r.pass = r.fraction_inside == 1.0;
  return r;
}

double sup_distance(const Profile& profile, const ShapeParam& c) {
  double best = 0.0;
  auto visit = [&](double X) { best = std::max(best, std::abs(profile(X) - omega_c(c, X))); };
  for (int k : profile.corner_indices()) visit(k * profile.step());
  const double lo = std::min(profile.support_left(), c.support_left());
  const double hi = std::max(profile.support_right(), c.support_right());
  constexpr double kGrid = 1e-3;
  const auto cells = static_cast<long>(std::ceil((hi - lo) / kGrid));
  for (long k = 0; k < cells; ++k) visit(lo + (static_cast<double>(k) + 0.5) * kGrid);
  return best;
}

ExperimentResult cmd_biane(const ExperimentConfig& config) {
  const ShapeParam target = (config.validate(), config.target_shape());
  auto r = run_samples("biane", config, [&](const Partition& lambda) { return sup_distance(Profile(lambda), target); });
  r.lower = 0.0;
  r.upper = config.tol;
  std::size_t inside = 0;
  for (const auto& rec : r.records)
    if (rec.value < r.upper) ++inside;
  r.fraction_inside = static_cast<double>(inside) / static_cast<double>(r.records.size());
  r.pass = r.summary.median < config.tol;
  return r;
}

BianeSweep cmd_biane_sweep(const ExperimentConfig& config, std::span<const int> ns) {
  if (ns.empty()) throw std::invalid_argument("biane sweep needs at least one n");
  BianeSweep sweep;
  for (int n : ns) {
    ExperimentConfig run = config;
    run.n = n;
    sweep.runs.push_back(cmd_biane(run));
  }
  sweep.decreasing = true;
  for (std::size_t k = 1; k < sweep.runs.size(); ++k)
    if (!(sweep.runs[k].summary.median < sweep.runs[k - 1].summary.median)) sweep.decreasing = false;
  sweep.pass = sweep.decreasing && sweep.runs.back().pass;
  return sweep;
}

DimsReport cmd_dims(const Partition& lambda, std::int64_t N) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  DimsReport r;
  r.lambda = lambda;
  r.N = N;
  r.dims = exact_dims(lambda, N);
  r.plancherel = plancherel(lambda).value;
  r.schur_weyl = schur_weyl_measure(lambda, N).value;
  return r;
}

void write_dims(std::ostream& os, const DimsReport& r, std::string_view format) {
  if (format == "json") {
    const nlohmann::json j = {{"partition", r.lambda.to_string()},
                              {"N", r.N},
                              {"dim_sym", r.dims.dim_sym.get_str()},
                              {"dim_gl", r.dims.dim_gl.get_str()},
                              {"dim_iso", r.dims.dim_iso.get_str()},
                              {"plancherel", r.plancherel.get_str()},
                              {"schur_weyl", r.schur_weyl.get_str()}};
    os << j.dump(2) << '\n';
    return;
  }
  os << "partition: " << r.lambda.to_string() << '\n'
     << "N: " << r.N << '\n'
     << "dim_sym: " << r.dims.dim_sym.get_str() << '\n'
     << "dim_gl: " << r.dims.dim_gl.get_str() << '\n'
     << "dim_iso: " << r.dims.dim_iso.get_str() << '\n'
     << "plancherel: " << r.plancherel.get_str() << '\n'
     << "schur_weyl: " << r.schur_weyl.get_str() << '\n';
}

bool cmd_enumerate(std::ostream& os, int n, int N, int cap) {
  if (n > cap) throw std::invalid_argument("enumeration is capped at n <= " + std::to_string(cap));
  const mpz_class sum = write_enumeration_csv(os, n, N);
  mpz_class expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(n));
  const bool ok = sum == expected;
  os << "# sum=" << sum.get_str() << " expected=" << expected.get_str() << ' ' << (ok ? "pass" : "fail") << '\n';
  return ok;
}

void cmd_constants(std::ostream& os, std::span<const double> cs, const QuadratureConfig& quad) {
  os << "c,alpha_c,beta\n";
  const double beta = beta_constant();
  for (double c : cs)
    os << format_double(c) << ',' << format_double(alpha_constant(ShapeParam(c), quad)) << ',' << format_double(beta)
       << '\n';
}

void cmd_emit_shape(std::ostream& os, const ShapeParam& c, double from, double to, double step) {
  if (!(step > 0) || !(to >= from)) throw std::invalid_argument("emit-shape needs from <= to and step > 0");
  os << "s,omega_c,omega_c_prime\n";
  const auto count = static_cast<long>(std::floor((to - from) / step + 1e-9));
  for (long k = 0; k <= count; ++k) {
    const double s = from + static_cast<double>(k) * step;
    os << format_double(s) << ',' << format_double(omega_c(c, s)) << ',' << format_double(omega_c_prime(c, s)) << '\n';
  }
}

ChiSquare chi_square_gof(std::span<const double> observed, std::span<const double> probabilities) {
  if (observed.size() != probabilities.size() || observed.empty())
    throw std::invalid_argument("chi-square needs matching nonempty cells");
  const double total = std::accumulate(observed.begin(), observed.end(), 0.0);
  std::vector<std::pair<double, double>> cells;  // (observed, expected)
  std::pair<double, double> pooled{0.0, 0.0};
  for (std::size_t k = 0; k < observed.size(); ++k) {
    const double expected = probabilities[k] * total;
    if (expected < 5) {
      pooled.first += observed[k];
      pooled.second += expected;
    } else {
      cells.emplace_back(observed[k], expected);
    }
  }
  if (pooled.second > 0) cells.push_back(pooled);
  ChiSquare out;
  for (const auto& [o, e] : cells) {
    if (e == 0) {
      if (o != 0) out.statistic = std::numeric_limits<double>::infinity();
      continue;
    }
    out.statistic += (o - e) * (o - e) / e;
  }
  out.dof = static_cast<int>(cells.size()) - 1;
  if (out.dof < 1) {
    out.p_value = 1.0;
    return out;
  }
  if (!std::isfinite(out.statistic)) return out;
  out.p_value = boost::math::cdf(boost::math::complement(boost::math::chi_squared(out.dof), out.statistic));
  return out;
}

ChiSquare schur_weyl_gof(int n, int N, std::size_t count, std::uint64_t seed, unsigned workers) {
  const auto diagrams = enumerate_diagrams(n, N);
  std::map<Partition, std::size_t> index;
  std::vector<double> probabilities;
  for (const auto& lambda : diagrams) {
    index.emplace(lambda, probabilities.size());
    probabilities.push_back(schur_weyl_measure(lambda, N).value.get_d());
  }
  std::vector<double> observed(diagrams.size(), 0.0);
  for (const auto& lambda : sample_schur_weyl(n, N, seed, count, workers)) observed[index.at(lambda)] += 1;
  return chi_square_gof(observed, probabilities);
}

CheckRecord make_check(std::string test, nlohmann::json params, double lhs, double rhs, double tol,
                       Relation relation) {
  CheckRecord r;
  r.test = std::move(test);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tol = tol;
  r.relation = relation;
  r.abs_err = std::abs(lhs - rhs);
  switch (relation) {
    case Relation::Equal:
      r.pass = r.abs_err <= tol;
      break;
    case Relation::AtLeast:
      r.pass = lhs >= rhs - tol;
      break;
    case Relation::AtMost:
      r.pass = lhs <= rhs + tol;
      break;
  }
  if (!std::isfinite(lhs) || !std::isfinite(rhs)) r.pass = false;
  return r;
}

nlohmann::json check_to_json(const CheckRecord& r) {
  static constexpr const char* kRelations[] = {"eq", "ge", "le"};
  return {{"test", r.test},
          {"params", r.params},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"abs_err", r.abs_err},
          {"tol", r.tol},
          {"relation", kRelations[static_cast<int>(r.relation)]},
          {"pass", r.pass}};
}

}  // namespace ytensor
