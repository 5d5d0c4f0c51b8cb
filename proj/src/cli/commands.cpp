// Copyright 2026 The simplexgen Authors
// SPDX-License-Identifier: Apache-2.0

#include "simplexgen/cli/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "simplexgen/batch.hpp"
#include "simplexgen/bench/bench.hpp"
#include "simplexgen/errors.hpp"
#include "simplexgen/stats/goodness_of_fit.hpp"
#include "simplexgen/stats/simplex_checks.hpp"

namespace simplexgen::cli {
namespace {

// Largest n for which `test` compares against the rejection oracle; above it
// sorted spacings stands in (rejection needs (n-1)! trials per point).
constexpr int kRejectionOracleMaxN = 7;
constexpr std::size_t kChiSquareBins = 50;
// Offset of the oracle's substreams so they never collide with the sampler's.
constexpr std::uint64_t kOracleStream = 0x0DAC1E5EEDULL;

class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      os_ = &fallback;
    } else {
      file_.open(path, std::ios::binary | std::ios::trunc);
      os_ = &file_;
    }
  }
  bool ok() const { return static_cast<bool>(*os_); }
  std::ostream& stream() { return *os_; }
  bool finish() {
    os_->flush();
    const bool good = static_cast<bool>(*os_);
    if (file_.is_open()) {
      file_.close();
      return good && !file_.fail();
    }
    return good;
  }

 private:
  std::ofstream file_;
  std::ostream* os_ = nullptr;
};

int write_batch(const RunConfig& config, const SimplexBatch& batch,
                std::ostream& out, std::ostream& err) {
  OutputTarget target(config.out_path, out);
  if (!target.ok()) {
    err << "error: cannot open '" << config.out_path << "' for writing\n";
    return kFailure;
  }
  write_points(target.stream(), batch, config.format, config.precision,
               config.header);
  if (!target.finish()) {
    err << "error: write failed\n";
    return kFailure;
  }
  return kSuccess;
}

double true_x1_cdf(int n, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return -std::expm1((n - 1) * std::log1p(-x));
}

struct InstrumentResult {
  std::string name;
  unsigned failures = 0;
};

// One pass of every instrument; returns the reports in a fixed order.
std::vector<stats::TestReport> run_instruments(const RunConfig& config,
                                               std::uint64_t seed,
                                               std::ostream& out) {
  const SamplerMethod method = config.methods.front();
  const int n = config.n;
  const SimplexBatch points = generate_batch(
      {method, config.model, n, config.samples, seed, config.jobs});
  const SamplerMethod oracle_method = n <= kRejectionOracleMaxN
                                          ? SamplerMethod::RejectionCube
                                          : SamplerMethod::SortedSpacings;
  const SimplexBatch oracle =
      generate_batch({oracle_method, MarginalModel::Corrected, n,
                      config.samples, substream_seed(seed, kOracleStream),
                      config.jobs});

  std::vector<stats::TestReport> reports;
  const auto x1 = stats::EmpiricalSample::from_unsorted(points.column(0));
  const stats::Cdf marginal = [n](double x) { return true_x1_cdf(n, x); };

  auto ks1 = stats::ks_one_sample(x1, marginal, config.alpha);
  ks1.name = "ks_marginal[x1]";
  reports.push_back(ks1);

  const std::size_t bins =
      std::clamp<std::size_t>(config.samples / 20, 10, kChiSquareBins);
  auto chi = stats::chi_square_marginal(x1, marginal, bins, config.alpha);
  chi.name = "chi_square_marginal[x1]";
  reports.push_back(chi);

  std::set<int> coords;
  for (int k : {1, 2, n - 1, n}) {
    if (k >= 1 && k <= n) coords.insert(k);
  }
  for (int k : coords) {
    const auto ks2 = stats::ks_two_sample(
        stats::EmpiricalSample::from_unsorted(points.column(k - 1)),
        stats::EmpiricalSample::from_unsorted(oracle.column(k - 1)),
        config.alpha);
    reports.push_back(ks2);
    reports.back().name = "ks_vs_" + std::string(to_string(oracle_method)) +
                          "[x" + std::to_string(k) + "]";
  }

  auto pit = stats::ks_one_sample(
      stats::EmpiricalSample::from_unsorted(
          stats::pit_transform(points, MarginalModel::Corrected)),
      [](double u) { return std::clamp(u, 0.0, 1.0); }, config.alpha);
  pit.name = "ks_pit_uniform";
  reports.push_back(pit);

  const auto moments = stats::moment_check(points);
  stats::TestReport m;
  m.name = "moments";
  m.alpha = config.alpha;
  m.size_a = moments.samples;
  m.critical_value = stats::kMomentStdErrors;
  auto worst = [&](const stats::MomentEstimate& e) {
    const double z = e.std_error > 0.0 ? std::fabs(e.value - e.target) / e.std_error
                                       : INFINITY;
    m.statistic = std::max(m.statistic, z);
  };
  std::for_each(moments.means.begin(), moments.means.end(), worst);
  std::for_each(moments.variances.begin(), moments.variances.end(), worst);
  worst(moments.covariance);
  m.pass = moments.pass();
  reports.push_back(m);

  for (const auto& r : reports) out << r.summary() << '\n';
  return reports;
}

}  // namespace

int cmd_sample(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const SimplexBatch batch = generate_batch({config.methods.front(), config.model,
                                             config.n, config.count, config.seed,
                                             config.jobs});
  return write_batch(config, batch, out, err);
}

int cmd_fig1b(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const SimplexBatch batch =
      generate_batch({SamplerMethod::StickBreaking, MarginalModel::Corrected, 3,
                      kFig1bRows, config.seed, config.jobs});
  return write_batch(config, batch, out, err);
}

int cmd_test(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.samples < stats::kMinMomentSamples) {
    err << "error: --samples must be at least " << stats::kMinMomentSamples << '\n';
    return kUsage;
  }
  const SamplerMethod method = config.methods.front();
  out << "# method=" << to_string(method) << " model=" << to_string(config.model)
      << " n=" << config.n << " samples=" << config.samples
      << " alpha=" << config.alpha << " seed=" << config.seed
      << " repeats=" << config.repeats << '\n';

  // Each instrument may fail at most once per 20 repetitions.
  const unsigned allowed = config.repeats / 20;
  std::vector<InstrumentResult> tally;
  for (unsigned rep = 0; rep < config.repeats; ++rep) {
    const std::uint64_t seed =
        config.repeats == 1 ? config.seed : substream_seed(config.seed, rep);
    const auto reports = run_instruments(config, seed, out);
    tally.resize(reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
      tally[i].name = reports[i].name;
      if (!reports[i].pass) ++tally[i].failures;
    }
  }

  bool all_pass = true;
  for (const auto& t : tally) {
    if (t.failures > allowed) all_pass = false;
  }
  out << "# verdict: " << (all_pass ? "PASS" : "FAIL") << '\n';
  return all_pass ? kSuccess : kFailure;
}

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err) {
  OutputTarget target(config.out_path, out);
  if (!target.ok()) {
    err << "error: cannot open '" << config.out_path << "' for writing\n";
    return kFailure;
  }
  const std::vector<int> dims =
      config.n_list.empty() ? std::vector<int>{config.n} : config.n_list;
  bench::BenchOptions options;
  options.batch = config.batch;
  options.repetitions = config.repetitions;
  options.seed = config.seed;
  options.jobs = config.jobs;
  options.model = config.model;

  target.stream() << bench::csv_header() << '\n';
  for (SamplerMethod method : config.methods) {
    for (int n : dims) {
      target.stream() << bench::to_csv_row(
                             bench::measure_throughput(method, n, options))
                      << '\n';
    }
  }
  if (!target.finish()) {
    err << "error: write failed\n";
    return kFailure;
  }
  return kSuccess;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Uniform sampling of the probability simplex", "simplexgen"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  RunConfig config;
  const std::vector<std::string> method_names{"stick", "rejection", "spacings",
                                              "exponential", "rescaled"};
  std::string method_name{"stick"};
  std::string format_name{"csv"};
  bool paper_literal = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", config.seed, "Base seed");
    sub->add_flag("--paper-literal", paper_literal,
                  "Use the step-independent exponent 1/(n-1) at every step "
                  "(default: corrected exponent 1/(n-j))");
    sub->add_option("--jobs", config.jobs, "Worker threads (output is identical for any value)")
        ->check(CLI::Range(1u, 1024u));
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    sub->add_option("--out", config.out_path, "Output file (default: stdout)");
    sub->add_option("--precision", config.precision, "Significant digits")
        ->check(CLI::Range(kMinPrecision, kMaxPrecision));
    sub->add_flag("--header", config.header, "Emit a CSV header x1,...,xn");
  };
  auto add_method = [&](CLI::App* sub) {
    sub->add_option("--method", method_name, "Sampler")->check(CLI::IsMember(method_names));
  };

  auto* sample = app.add_subcommand("sample", "Generate points on the simplex");
  sample->add_option("--n", config.n, "Number of outcomes (simplex dimension + 1)")
      ->check(CLI::Range(2, 1 << 24));
  sample->add_option("--count", config.count, "Number of points")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 40));
  add_method(sample);
  add_common(sample);
  add_output(sample);

  auto* test = app.add_subcommand("test", "Run the uniformity test suite on a sampler");
  test->add_option("--n", config.n, "Number of outcomes")->check(CLI::Range(2, 1 << 16));
  test->add_option("--samples", config.samples, "Points per instrument")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 32));
  test->add_option("--alpha", config.alpha, "Significance level {0.05|0.01}")
      ->check(CLI::IsMember({0.05, 0.01}));
  test->add_option("--repeats", config.repeats,
                   "Independent-seed repetitions; each instrument may fail once per 20")
      ->check(CLI::Range(1u, 1000u));
  add_method(test);
  add_common(test);

  auto* fig = app.add_subcommand("fig1b", "Emit 5000 stick-breaking points on the 2-simplex");
  fig->add_option("--seed", config.seed, "Seed");
  fig->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  add_output(fig);

  std::vector<std::string> bench_methods;
  auto* bench = app.add_subcommand("bench", "Throughput and draw-count audit as CSV");
  bench->add_option("--methods,--method", bench_methods,
                    "Comma-separated samplers (default: stick)")
      ->delimiter(',')
      ->check(CLI::IsMember(method_names));
  bench->add_option("--n-list", config.n_list, "Comma-separated dimensions")
      ->delimiter(',')
      ->check(CLI::Range(2, 1 << 24));
  bench->add_option("--n", config.n, "Dimension when --n-list is absent")
      ->check(CLI::Range(2, 1 << 24));
  bench->add_option("--batch", config.batch, "Points per repetition (0 = calibrate)");
  bench->add_option("--repetitions", config.repetitions, "Timed repetitions (min 5)");
  bench->add_option("--out", config.out_path, "Output file (default: stdout)");
  add_common(bench);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  config.model = paper_literal ? MarginalModel::PaperLiteral : MarginalModel::Corrected;
  config.format = format_name == "jsonl" ? PointFormat::Jsonl : PointFormat::Csv;
  config.methods = {*parse_sampler_method(method_name)};
  if (!bench_methods.empty()) {
    config.methods.clear();
    for (const auto& name : bench_methods) {
      config.methods.push_back(*parse_sampler_method(name));
    }
  }

  try {
    if (*sample) {
      config.subcommand = "sample";
      return cmd_sample(config, out, err);
    }
    if (*test) {
      config.subcommand = "test";
      return cmd_test(config, out, err);
    }
    if (*fig) {
      config.subcommand = "fig1b";
      return cmd_fig1b(config, out, err);
    }
    config.subcommand = "bench";
    return cmd_bench(config, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace simplexgen::cli
