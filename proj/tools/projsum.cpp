// projsum: spectra of sums of two random projections -- samplers, limit
// densities, and seeded Monte Carlo experiments with CSV/JSON reports.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "projsum/acceptance.hpp"
#include "projsum/config.hpp"
#include "projsum/densities.hpp"
#include "projsum/ensembles.hpp"
#include "projsum/reporting.hpp"
#include "projsum/spectra.hpp"
#include "projsum/stats.hpp"
#include "projsum/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitAssertion = 3;

struct AssertionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buffer;
}

// --- spectrum ------------------------------------------------------------

struct SpectrumArgs {
  int n = 0, p = 0, q = 0;
  double theta = 1.0;
  int beta = 2;
  std::uint64_t seed = 1;
  std::string path = "direct";
  std::string out;
  bool allow_rank_overflow = false;
};

void run_spectrum(const SpectrumArgs& args) {
  const projsum::EnsembleParams params(args.n, args.p, args.q, args.theta, args.beta,
                                       args.allow_rank_overflow);
  projsum::Spectrum spec;
  if (args.path == "direct") {
    const auto eigs = projsum::self_adjoint_eigenvalues(
        projsum::sample_sum_matrix(params, projsum::SeedSpec{args.seed, 0}));
    spec = projsum::classify_eigenvalues(eigs, params);
  } else if (args.path == "jacobi") {
    const auto points = projsum::sample_jacobi_spectrum(params, projsum::SeedSpec{args.seed, 0});
    spec = projsum::predicted_spectrum(points, params);
  } else {
    throw CLI::ValidationError("--path", "must be 'direct' or 'jacobi'");
  }
  write_file(args.out, projsum::spectrum_csv(spec));
}

// --- density -------------------------------------------------------------

struct DensityArgs {
  std::optional<double> p, q, s, t;
  int grid_points = 200;
  std::string out;
};

void run_density(const DensityArgs& args) {
  projsum::LimitShape shape;
  std::string label;
  if (args.p && args.q) {
    if (args.s || args.t)
      throw CLI::ValidationError("--s/--t", "give either --p/--q or --s/--t, not both");
    const projsum::LimitParams lp(*args.p, *args.q);
    shape = projsum::sum_shape(lp);
    label = "sum p=" + projsum::format_double(lp.p) + " q=" + projsum::format_double(lp.q);
  } else if (args.s && args.t) {
    shape = projsum::jacobi_shape(*args.s, *args.t);
    label = "jacobi s=" + projsum::format_double(*args.s) +
            " t=" + projsum::format_double(*args.t);
  } else {
    throw CLI::ValidationError("--p/--q", "need both --p and --q (or both --s and --t)");
  }
  write_file(args.out, projsum::density_csv(shape, label, args.grid_points));
}

// --- experiment ----------------------------------------------------------

struct ExperimentArgs {
  std::string mode;
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
};

void run_experiment_cmd(const ExperimentArgs& args, const std::string& command_line) {
  const auto mode = projsum::parse_mode(args.mode);
  if (!mode)
    throw projsum::ConfigError("--mode", "unknown mode '" + args.mode + "'");
  const auto kv = projsum::parse_key_value_file(args.config_path);
  auto resolved = projsum::build_experiment_config(*mode, kv, args.seed);

  std::filesystem::create_directories(args.out_dir);
  const std::string started = timestamp_utc();
  const projsum::ExperimentReport report = projsum::run_experiment(resolved.config);
  const auto assertions = projsum::evaluate_assertions(report, resolved.assertions);
  const std::string finished = timestamp_utc();

  const auto dir = std::filesystem::path(args.out_dir);
  write_file((dir / "report.json").string(),
             projsum::experiment_report_json(report, assertions));
  write_file((dir / "samples.csv").string(), projsum::experiment_samples_csv(report));
  write_file((dir / "manifest.json").string(),
             projsum::run_manifest_json(report, command_line, started, finished,
                                        {"report.json", "samples.csv"}));

  for (const auto& a : assertions) {
    std::cerr << "assertion " << a.name << ": " << (a.pass ? "pass" : "FAIL")
              << " (observed " << a.observed << ", limit " << a.limit << ")\n";
    if (!a.pass) throw AssertionFailure("assertion failed: " + a.name);
  }
}

// --- selftest ------------------------------------------------------------

struct SelftestArgs {
  std::uint64_t seed = 42;
  unsigned threads = 0;
  std::vector<int> criteria;
};

bool run_selftest(const SelftestArgs& args) {
  projsum::AcceptanceOptions options;
  options.master_seed = args.seed;
  options.threads = args.threads;
  options.criteria = args.criteria;
  options.on_result = [](const projsum::CriterionResult& r) {
    std::printf("criterion %2d [%s] %-55s %7.1fs  %s\n", r.id, r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.seconds, r.detail.c_str());
    std::fflush(stdout);
  };
  const auto results = projsum::run_acceptance(options);
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  std::printf("%zu criteria run: %s\n", results.size(), all ? "all passed" : "FAILURES present");
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectra of sums of two random projections"};
  app.set_version_flag("--version", projsum::kVersion);
  app.require_subcommand(1);

  SpectrumArgs spectrum_args;
  auto* spectrum = app.add_subcommand("spectrum", "sample one spectrum and write it as CSV");
  spectrum->add_option("--n", spectrum_args.n, "ambient dimension N")->required();
  spectrum->add_option("--p", spectrum_args.p, "rank of P")->required();
  spectrum->add_option("--q", spectrum_args.q, "rank of Q")->required();
  spectrum->add_option("--theta", spectrum_args.theta, "coupling theta (default 1)");
  spectrum->add_option("--beta", spectrum_args.beta, "field index: 1 real, 2 complex");
  spectrum->add_option("--seed", spectrum_args.seed, "master seed");
  spectrum->add_option("--path", spectrum_args.path, "direct | jacobi (default direct)");
  spectrum->add_option("--out", spectrum_args.out, "output CSV path")->required();
  spectrum->add_flag("--allow-rank-overflow", spectrum_args.allow_rank_overflow,
                     "permit p + q > N (eigenvalue-2 atoms appear)");

  DensityArgs density_args;
  auto* density = app.add_subcommand("density", "limit density grid as CSV");
  density->add_option("--p", density_args.p, "limiting rank fraction of P");
  density->add_option("--q", density_args.q, "limiting rank fraction of Q");
  density->add_option("--s", density_args.s, "Jacobi weight-exponent rate s");
  density->add_option("--t", density_args.t, "Jacobi weight-exponent rate t");
  density->add_option("--grid-points", density_args.grid_points,
                      "samples per support interval (default 200)")
      ->check(CLI::PositiveNumber);
  density->add_option("--out", density_args.out, "output CSV path")->required();

  ExperimentArgs experiment_args;
  auto* experiment =
      app.add_subcommand("experiment", "seeded Monte Carlo run with JSON/CSV reports");
  experiment->add_option("--mode", experiment_args.mode,
                         "counting | variance-growth | hard-edge | soft-edge")
      ->required();
  experiment->add_option("--config", experiment_args.config_path, "key = value config file")
      ->required();
  experiment->add_option("--seed", experiment_args.seed, "master seed (overrides config)");
  experiment->add_option("--out-dir", experiment_args.out_dir, "output directory")->required();

  SelftestArgs selftest_args;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_option("--seed", selftest_args.seed, "master seed (default 42)");
  selftest->add_option("--threads", selftest_args.threads, "worker cap (default: PROJSUM_THREADS)");
  selftest->add_option("--criteria", selftest_args.criteria, "subset of criteria ids to run");

  try {
    app.parse(argc, argv);
    std::string command_line;
    for (int i = 0; i < argc; ++i) {
      if (i) command_line += ' ';
      command_line += argv[i];
    }
    if (spectrum->parsed()) run_spectrum(spectrum_args);
    if (density->parsed()) run_density(density_args);
    if (experiment->parsed()) run_experiment_cmd(experiment_args, command_line);
    if (selftest->parsed()) return run_selftest(selftest_args) ? kExitOk : kExitAssertion;
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints help/version or the parse diagnostic
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  } catch (const AssertionFailure& e) {
    std::cerr << "projsum: " << e.what() << '\n';
    return kExitAssertion;
  } catch (const projsum::ConfigError& e) {
    std::cerr << "projsum: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "projsum: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "projsum: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "projsum: internal error: " << e.what() << '\n';
    return 1;
  }
}
