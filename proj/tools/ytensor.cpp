#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ytensor/format.hpp"
#include "ytensor/harness.hpp"
#include "ytensor/rsk.hpp"

namespace {

using namespace ytensor;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

/// Flags shared by the experiment subcommands; unset ones leave the config
/// file (or the defaults) in place.
struct CommonFlags {
  std::optional<int> n;
  std::optional<int> N;
  std::optional<double> c;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<unsigned> workers;
  std::string out;
  std::string format;
  std::string config;

  void attach(CLI::App* app) {
    app->add_option("--n", n, "number of cells");
    app->add_option("--N", N, "rank (alphabet size)");
    app->add_option("--c", c, "target sqrt(n)/N; N = round(sqrt(n)/c)");
    app->add_option("--samples", samples, "number of trials");
    app->add_option("--seed", seed, "64-bit seed");
    app->add_option("--tol", tol, "tolerance or gate");
    app->add_option("--workers", workers, "worker threads");
    app->add_option("--out", out, "output file (default stdout)");
    app->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app->add_option("--config", config, "key=value config file; flags override");
  }

  ExperimentConfig resolve() const {
    ExperimentConfig cfg;
    if (!config.empty()) cfg = load_config_file(config);
    if (n) cfg.n = *n;
    if (N) {
      cfg.N = *N;
      if (!c) cfg.c.reset();
    }
    if (c) {
      cfg.c = *c;
      if (!N) cfg.N.reset();
    }
    if (samples) cfg.samples = *samples;
    if (seed) cfg.seed = *seed;
    if (tol) cfg.tol = *tol;
    if (workers) cfg.workers = *workers;
    if (!out.empty()) cfg.out = out;
    if (!format.empty()) cfg.format = format;
    return cfg;
  }
};

/// Stdout unless a path is given.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::invalid_argument("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int emit_result(const ExperimentConfig& cfg, const ExperimentResult& result) {
  Output out(cfg.out);
  if (cfg.format == "json")
    out.stream() << result_to_json(result).dump(2) << '\n';
  else
    write_result_csv(out.stream(), result);
  return result.pass ? kPass : kFail;
}

QuadratureConfig quad_from(const CommonFlags& flags) {
  QuadratureConfig quad = tight_quadrature();
  if (flags.tol) {
    quad.abs_tol = *flags.tol;
    quad.rel_tol = *flags.tol;
  }
  return quad;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimensions of isotypic components of tensor powers: exact values, samplers, limit shapes"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string lambda_text;
  std::vector<int> sweep;
  std::vector<double> c_grid;
  double from = 0;
  double to = 0;
  double step = 0.01;
  double slack = 0.05;
  double fault = 0.0;

  auto* dims = app.add_subcommand("dims", "exact dimensions and measures of one diagram");
  dims->add_option("--lambda", lambda_text, "partition, e.g. 3,2,1")->required();
  flags.attach(dims);

  auto* enumerate = app.add_subcommand("enumerate", "all diagrams with at most N rows, checking the sum N^n");
  flags.attach(enumerate);

  auto* sample = app.add_subcommand("sample", "dump P_N^n samples");
  flags.attach(sample);

  auto* profile = app.add_subcommand("profile", "corners of the scaled boundary of a diagram");
  profile->add_option("--lambda", lambda_text, "partition")->required();
  flags.attach(profile);

  auto* emit_shape = app.add_subcommand("emit-shape", "table of Omega_c and its derivative");
  emit_shape->add_option("--from", from, "first s (default: support start - 0.5)");
  emit_shape->add_option("--to", to, "last s (default: support end + 0.5)");
  emit_shape->add_option("--step", step, "grid step");
  flags.attach(emit_shape);

  auto* constants = app.add_subcommand("constants", "alpha_c and beta on a grid of c");
  constants->add_option("--grid", c_grid, "values of c")->delimiter(',');
  flags.attach(constants);

  auto* bounds = app.add_subcommand("bounds", "check alpha_c - slack < -ln P/sqrt(n) < beta on samples");
  bounds->add_option("--slack", slack, "allowance below alpha_c");
  flags.attach(bounds);

  auto* biane = app.add_subcommand("biane", "sup distance of sampled profiles to Omega_c");
  biane->add_option("--sweep", sweep, "several n, medians must decrease")->delimiter(',');
  flags.attach(biane);

  auto* decompose = app.add_subcommand("decompose", "terms of the exact decomposition of -ln P/sqrt(n)");
  decompose->add_option("--lambda", lambda_text, "partition")->required();
  flags.attach(decompose);

  auto* verify = app.add_subcommand("verify", "run every identity and property check, JSON report");
  verify->add_option("--grid", c_grid, "values of c for the closed-form checks")->delimiter(',');
  verify->add_option("--inject-h-offset", fault, "add a constant to H~_c' (fault injection)");
  flags.attach(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*dims) {
      if (!flags.N) throw std::invalid_argument("dims needs --N");
      Output out(flags.out);
      write_dims(out.stream(), cmd_dims(Partition::parse(lambda_text), *flags.N), flags.format);
      return kPass;
    }
    if (*enumerate) {
      if (!flags.n || !flags.N) throw std::invalid_argument("enumerate needs --n and --N");
      Output out(flags.out);
      return cmd_enumerate(out.stream(), *flags.n, *flags.N) ? kPass : kFail;
    }
    if (*sample) {
      const auto cfg = flags.resolve();
      cfg.validate();
      Output out(cfg.out);
      const int N = cfg.resolved_N();
      write_sample_dump(out.stream(), cfg.n, N, cfg.seed, sample_schur_weyl(cfg.n, N, cfg.seed, cfg.samples, cfg.workers));
      return kPass;
    }
    if (*profile) {
      Output out(flags.out);
      write_profile_csv(out.stream(), Profile(Partition::parse(lambda_text)));
      return kPass;
    }
    if (*emit_shape) {
      const ShapeParam c(flags.c.value_or(0.0));
      const bool explicit_range = emit_shape->count("--from") || emit_shape->count("--to");
      const double lo = explicit_range ? from : std::min(c.support_left(), c.curved_left()) - 0.5;
      const double hi = explicit_range ? to : c.support_right() + 0.5;
      Output out(flags.out);
      cmd_emit_shape(out.stream(), c, lo, hi, step);
      return kPass;
    }
    if (*constants) {
      if (c_grid.empty()) c_grid = {0.0, 0.1, 0.25, 0.5, 1.0, 2.0, 5.0};
      Output out(flags.out);
      cmd_constants(out.stream(), c_grid, quad_from(flags));
      return kPass;
    }
    if (*bounds) {
      auto cfg = flags.resolve();
      if (bounds->count("--slack")) cfg.slack = slack;
      return emit_result(cfg, cmd_bounds(cfg));
    }
    if (*biane) {
      auto cfg = flags.resolve();
      if (!flags.tol && flags.config.empty()) cfg.tol = 0.1;
      if (sweep.empty()) return emit_result(cfg, cmd_biane(cfg));
      const auto result = cmd_biane_sweep(cfg, sweep);
      Output out(cfg.out);
      if (cfg.format == "json") {
        nlohmann::json runs = nlohmann::json::array();
        for (const auto& r : result.runs) runs.push_back(result_to_json(r));
        out.stream() << nlohmann::json{{"runs", runs}, {"decreasing", result.decreasing}, {"pass", result.pass}}.dump(2)
                     << '\n';
      } else {
        out.stream() << "n,N,c,median,mean,stderr,pass\n";
        for (const auto& r : result.runs)
          out.stream() << r.n << ',' << r.N << ',' << format_double(r.c) << ',' << format_double(r.summary.median) << ','
                       << format_double(r.summary.mean) << ',' << format_double(r.summary.stderr_mean) << ','
                       << (r.pass ? "pass" : "fail") << '\n';
        out.stream() << "# decreasing=" << (result.decreasing ? "yes" : "no") << ' ' << (result.pass ? "pass" : "fail")
                     << '\n';
      }
      return result.pass ? kPass : kFail;
    }
    if (*decompose) {
      if (!flags.N) throw std::invalid_argument("decompose needs --N");
      const auto r = prop31_decompose(Partition::parse(lambda_text), *flags.N, quad_from(flags));
      Output out(flags.out);
      out.stream() << nlohmann::json{{"n", r.n},           {"N", r.N},
                                     {"c", r.c},           {"theta", r.theta},
                                     {"rho", r.rho},       {"theta_hat", r.theta_hat},
                                     {"rho_hat", r.rho_hat}, {"sobolev_sq", r.sobolev_sq},
                                     {"h_term", r.h_term}, {"lhs", r.lhs},
                                     {"residual", r.residual}}
                          .dump(2)
                   << '\n';
      return kPass;
    }
    if (*verify) {
      VerifyOptions options;
      options.quad = quad_from(flags);
      if (!c_grid.empty()) options.c_grid = c_grid;
      if (flags.seed) options.seed = *flags.seed;
      if (flags.workers) options.workers = *flags.workers;
      options.h_prime_offset = fault;
      const auto report = cmd_verify_all(options);
      Output out(flags.out);
      out.stream() << verify_report_json(report).dump(2) << '\n';
      return report.pass ? kPass : kFail;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
