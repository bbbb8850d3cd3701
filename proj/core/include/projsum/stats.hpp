#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "projsum/ensembles.hpp"
#include "projsum/interval.hpp"

namespace projsum {

enum class ExperimentMode { counting, variance_growth, hard_edge, soft_edge };

const char* to_string(ExperimentMode mode);

/// Fully resolved Monte Carlo experiment description. Replicate r draws
/// its randomness from stream (master_seed, r) -- ladder rung k uses
/// stream index (k << 32) + r -- so results are independent of the
/// parallel schedule and the worker count.
struct ExperimentConfig {
  EnsembleParams params;
  ExperimentMode mode = ExperimentMode::counting;
  int replicates = 0;
  std::uint64_t master_seed = 0;
  std::optional<Interval> interval;  // counting and variance_growth
  std::vector<double> t_grid;        // hard_edge
  std::vector<int> n_ladder;         // variance_growth: ambient dimensions
  unsigned threads = 0;              // 0 = PROJSUM_THREADS or hardware
};

/// Counting statistics for a fixed interval. mean_count and var_count
/// describe the raw integer counts; normalized_samples carry the
/// continuity-corrected values (count + U(-1/2, 1/2) jitter, standardized
/// to zero mean and unit variance) whose distribution the CLT governs, and
/// ks_vs_normal is their Kolmogorov-Smirnov distance from the standard
/// normal CDF.
struct CountingSummary {
  double mean_count = 0.0;
  double var_count = 0.0;
  std::vector<int> counts;
  std::vector<double> normalized_samples;
  double ks_vs_normal = 0.0;
};

struct VarianceGrowthPoint {
  int dimension;
  double mean_count;
  double var_count;
};

/// Per-rung count variances and the least-squares slope of variance
/// against log N.
struct VarianceGrowthSummary {
  std::vector<VarianceGrowthPoint> ladder;
  std::vector<std::vector<int>> counts;  // counts[rung][replicate]
  double slope = 0.0;
  double intercept = 0.0;
};

struct HardEdgePoint {
  double t;
  double empirical_mean;
  double std_error;
  double theory;
};

/// Mean eigenvalue counts in [1, 1 + t/(sqrt(2) p)] against the Bessel
/// counting integrals. Counts are taken over the continuous spectrum
/// (equivalently, Jacobi points in [0, t^2/(2 p^2)]); the deterministic
/// atoms at exactly 1 are not part of the hard-edge statistic.
struct HardEdgeSummary {
  std::vector<HardEdgePoint> points;
  std::vector<std::vector<int>> counts;  // counts[t index][replicate]
};

/// Largest-eigenvalue statistics against the Tracy-Widom reference.
/// center is 1 + mu; scale_fitted is sigma-hat from matching the sample
/// variance to the reference variance at the N^{-2/3} scale;
/// scaled_samples are standardized to the reference mean and variance.
struct EdgeSummary {
  std::vector<double> raw_max;
  double center = 0.0;
  double scale_fitted = 0.0;
  std::vector<double> scaled_samples;
  double ks_vs_tw = 0.0;
  double sample_mean = 0.0;
  double sample_skewness = 0.0;
};

/// Aggregated result with full provenance; exactly one summary is set,
/// matching mode.
struct ExperimentReport {
  ExperimentConfig config;
  std::optional<CountingSummary> counting;
  std::optional<VarianceGrowthSummary> variance_growth;
  std::optional<HardEdgeSummary> hard_edge;
  std::optional<EdgeSummary> soft_edge;
};

/// Counting statistics of the spectrum in cfg.interval, which must be a
/// proper subinterval of (0, 1) or (1, 2) with positive length.
CountingSummary run_counting(const ExperimentConfig& cfg);

/// Count variance across the dimension ladder (>= 4 rungs) at fixed rank
/// fractions and fixed interval.
VarianceGrowthSummary run_variance_growth(const ExperimentConfig& cfg);

/// Hard-edge counts near x = 1 for each t in cfg.t_grid; requires theta = 1.
HardEdgeSummary run_hard_edge(const ExperimentConfig& cfg);

/// Largest-eigenvalue fluctuations; requires theta = 1 and p + q < N.
EdgeSummary run_soft_edge(const ExperimentConfig& cfg);

/// Dispatches on cfg.mode.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// Kolmogorov-Smirnov distance between the empirical CDF of samples
/// (>= 2 values) and a reference CDF.
double ks_distance(std::span<const double> samples, const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov distance.
double ks_distance_two_sample(std::span<const double> a, std::span<const double> b);

/// Standard normal CDF.
double normal_cdf(double x);

/// Sample skewness (biased, moment-based).
double sample_skewness(std::span<const double> samples);

}  // namespace projsum
