#include "projsum/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "projsum/densities.hpp"
#include "projsum/parallel.hpp"
#include "projsum/spectra.hpp"
#include "projsum/specfun.hpp"

namespace projsum {

const char* to_string(ExperimentMode mode) {
  switch (mode) {
    case ExperimentMode::counting: return "counting";
    case ExperimentMode::variance_growth: return "variance-growth";
    case ExperimentMode::hard_edge: return "hard-edge";
    case ExperimentMode::soft_edge: return "soft-edge";
  }
  return "unknown";
}

namespace {

double mean_of(std::span<const double> xs) {
  double acc = 0.0;
  for (double x : xs) acc += x;
  return acc / static_cast<double>(xs.size());
}

double variance_of(std::span<const double> xs, double mean) {
  double acc = 0.0;
  for (double x : xs) acc += (x - mean) * (x - mean);
  return acc / static_cast<double>(xs.size() - 1);
}

void require_replicates(const ExperimentConfig& cfg) {
  if (cfg.replicates < 100)
    throw std::invalid_argument("ExperimentConfig: at least 100 replicates required");
}

void require_counting_interval(const Interval& iv) {
  const bool in_left = iv.lo > 0.0 && iv.hi < 1.0;
  const bool in_right = iv.lo > 1.0 && iv.hi < 2.0;
  if (!(iv.length() > 0.0) || !(in_left || in_right))
    throw std::invalid_argument(
        "counting interval must have positive length and avoid {0, 1, 2}");
}

// Raw per-replicate counts in iv via the Jacobi path.
std::vector<int> replicate_counts(const EnsembleParams& params, const Interval& iv,
                                  int replicates, std::uint64_t master_seed,
                                  std::uint64_t stream_base, unsigned threads) {
  std::vector<int> counts(replicates);
  parallel_for(static_cast<std::size_t>(replicates), threads, [&](std::size_t r) {
    const SeedSpec seed{master_seed, stream_base + r};
    const auto points = sample_jacobi_spectrum(params, seed);
    const Spectrum spec = predicted_spectrum(points, params);
    counts[r] = count_in_interval(spec, iv);
  });
  return counts;
}

}  // namespace

CountingSummary run_counting(const ExperimentConfig& cfg) {
  require_replicates(cfg);
  if (!cfg.interval) throw std::invalid_argument("run_counting: interval required");
  require_counting_interval(*cfg.interval);

  CountingSummary summary;
  summary.counts = replicate_counts(cfg.params, *cfg.interval, cfg.replicates, cfg.master_seed,
                                    0, cfg.threads);

  std::vector<double> raw(summary.counts.begin(), summary.counts.end());
  summary.mean_count = mean_of(raw);
  summary.var_count = variance_of(raw, summary.mean_count);

  // Continuity correction: counts live on a lattice whose spacing is
  // comparable to the standard deviation at feasible N, so the empirical
  // CDF of the bare counts stays a bounded distance from any continuous
  // law. The seeded U(-1/2, 1/2) jitter restores the CLT comparison.
  std::vector<double> jittered(raw.size());
  for (std::size_t r = 0; r < raw.size(); ++r) {
    RngStream rng(SeedSpec{cfg.master_seed, r}, StreamPurpose::count_jitter);
    jittered[r] = raw[r] + rng.uniform01() - 0.5;
  }
  const double jmean = mean_of(jittered);
  const double jsd = std::sqrt(variance_of(jittered, jmean));
  if (!(jsd > 0.0))
    throw std::invalid_argument("run_counting: degenerate counts, KS undefined");
  summary.normalized_samples.resize(jittered.size());
  for (std::size_t r = 0; r < jittered.size(); ++r)
    summary.normalized_samples[r] = (jittered[r] - jmean) / jsd;
  summary.ks_vs_normal =
      ks_distance(summary.normalized_samples, [](double x) { return normal_cdf(x); });
  return summary;
}

VarianceGrowthSummary run_variance_growth(const ExperimentConfig& cfg) {
  require_replicates(cfg);
  if (!cfg.interval) throw std::invalid_argument("run_variance_growth: interval required");
  require_counting_interval(*cfg.interval);
  if (cfg.n_ladder.size() < 4)
    throw std::invalid_argument("run_variance_growth: ladder needs at least 4 dimension values");

  const double p_ratio = cfg.params.p_fraction();
  const double q_ratio = cfg.params.q_fraction();

  VarianceGrowthSummary summary;
  for (std::size_t rung = 0; rung < cfg.n_ladder.size(); ++rung) {
    const int n = cfg.n_ladder[rung];
    const int p = static_cast<int>(std::llround(p_ratio * n));
    const int q = static_cast<int>(std::llround(q_ratio * n));
    const EnsembleParams params(n, p, q, cfg.params.theta, cfg.params.beta);
    auto counts = replicate_counts(params, *cfg.interval, cfg.replicates, cfg.master_seed,
                                   static_cast<std::uint64_t>(rung) << 32, cfg.threads);
    std::vector<double> raw(counts.begin(), counts.end());
    const double mean = mean_of(raw);
    summary.ladder.push_back({n, mean, variance_of(raw, mean)});
    summary.counts.push_back(std::move(counts));
  }

  // Least squares of var against log N.
  const std::size_t k = summary.ladder.size();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& pt : summary.ladder) {
    const double x = std::log(static_cast<double>(pt.dimension));
    sx += x;
    sy += pt.var_count;
    sxx += x * x;
    sxy += x * pt.var_count;
  }
  const double denom = k * sxx - sx * sx;
  summary.slope = (k * sxy - sx * sy) / denom;
  summary.intercept = (sy - summary.slope * sx) / k;
  return summary;
}

HardEdgeSummary run_hard_edge(const ExperimentConfig& cfg) {
  require_replicates(cfg);
  if (cfg.params.theta != 1.0)
    throw std::invalid_argument("run_hard_edge: the near-1 analysis requires theta = 1");
  if (cfg.t_grid.empty()) throw std::invalid_argument("run_hard_edge: empty t grid");
  for (double t : cfg.t_grid)
    if (t < 0.0) throw std::invalid_argument("run_hard_edge: t values must be >= 0");

  const int a = cfg.params.atom_theta_count();
  const double p = static_cast<double>(cfg.params.p_rank);

  HardEdgeSummary summary;
  summary.counts.assign(cfg.t_grid.size(), std::vector<int>(cfg.replicates));

  parallel_for(static_cast<std::size_t>(cfg.replicates), cfg.threads, [&](std::size_t r) {
    const auto points = sample_jacobi_spectrum(cfg.params, SeedSpec{cfg.master_seed, r});
    for (std::size_t i = 0; i < cfg.t_grid.size(); ++i) {
      const double tau = cfg.t_grid[i] * cfg.t_grid[i] / (2.0 * p * p);
      summary.counts[i][r] = static_cast<int>(
          std::upper_bound(points.begin(), points.end(), tau) - points.begin());
    }
  });

  for (std::size_t i = 0; i < cfg.t_grid.size(); ++i) {
    const double t = cfg.t_grid[i];
    std::vector<double> raw(summary.counts[i].begin(), summary.counts[i].end());
    const double mean = mean_of(raw);
    const double se = std::sqrt(variance_of(raw, mean) / cfg.replicates);
    const double theory = cfg.params.beta == 2 ? hard_edge_count_complex(a, t)
                                               : hard_edge_count_real(a, t);
    summary.points.push_back({t, mean, se, theory});
  }
  return summary;
}

EdgeSummary run_soft_edge(const ExperimentConfig& cfg) {
  require_replicates(cfg);
  if (cfg.params.theta != 1.0)
    throw std::invalid_argument("run_soft_edge: edge analysis requires theta = 1");
  if (cfg.params.p_rank + cfg.params.q_rank >= cfg.params.dimension)
    throw std::invalid_argument("run_soft_edge: requires p + q < N strictly");

  EdgeSummary summary;
  summary.raw_max.resize(cfg.replicates);
  parallel_for(static_cast<std::size_t>(cfg.replicates), cfg.threads, [&](std::size_t r) {
    const auto points = sample_jacobi_spectrum(cfg.params, SeedSpec{cfg.master_seed, r});
    summary.raw_max[r] = 1.0 + std::sqrt(std::max(points.back(), 0.0));
  });

  const double p = cfg.params.p_fraction();
  const double q = cfg.params.q_fraction();
  const double mu = std::sqrt(q * (1.0 - p)) + std::sqrt(p * (1.0 - q));
  summary.center = 1.0 + mu;

  const TwReference& tw = tw_reference(cfg.params.beta);
  summary.sample_mean = mean_of(summary.raw_max);
  const double sd = std::sqrt(variance_of(summary.raw_max, summary.sample_mean));
  const double n23 = std::pow(static_cast<double>(cfg.params.dimension), -2.0 / 3.0);
  summary.scale_fitted = sd / std::sqrt(tw.variance) / n23;

  // Standardize to the reference moments; the KS statistic then probes the
  // distribution's shape beyond mean and variance.
  const double tw_sd = std::sqrt(tw.variance);
  summary.scaled_samples.resize(summary.raw_max.size());
  for (std::size_t i = 0; i < summary.raw_max.size(); ++i)
    summary.scaled_samples[i] =
        (summary.raw_max[i] - summary.sample_mean) / sd * tw_sd + tw.mean;
  summary.ks_vs_tw = ks_distance(summary.scaled_samples, [&](double x) { return tw.cdf(x); });
  summary.sample_skewness = sample_skewness(summary.scaled_samples);
  return summary;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  ExperimentReport report{cfg, {}, {}, {}, {}};
  switch (cfg.mode) {
    case ExperimentMode::counting: report.counting = run_counting(cfg); break;
    case ExperimentMode::variance_growth: report.variance_growth = run_variance_growth(cfg); break;
    case ExperimentMode::hard_edge: report.hard_edge = run_hard_edge(cfg); break;
    case ExperimentMode::soft_edge: report.soft_edge = run_soft_edge(cfg); break;
  }
  return report;
}

double ks_distance(std::span<const double> samples, const std::function<double(double)>& cdf) {
  if (samples.size() < 2)
    throw std::invalid_argument("ks_distance: at least two samples required");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double dist = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    dist = std::max(dist, std::max(f - i / n, (i + 1) / n - f));
  }
  return dist;
}

double ks_distance_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2)
    throw std::invalid_argument("ks_distance_two_sample: at least two samples per side");
  std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  double dist = 0.0;
  std::size_t i = 0, j = 0;
  while (i < sa.size() && j < sb.size()) {
    const double x = std::min(sa[i], sb[j]);
    while (i < sa.size() && sa[i] == x) ++i;
    while (j < sb.size() && sb[j] == x) ++j;
    dist = std::max(dist, std::abs(static_cast<double>(i) / sa.size() -
                                   static_cast<double>(j) / sb.size()));
  }
  return dist;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double sample_skewness(std::span<const double> samples) {
  const double mean = mean_of(samples);
  double m2 = 0.0, m3 = 0.0;
  for (double x : samples) {
    const double d = x - mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  m2 /= static_cast<double>(samples.size());
  m3 /= static_cast<double>(samples.size());
  return m3 / std::pow(m2, 1.5);
}

}  // namespace projsum
