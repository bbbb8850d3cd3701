#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace projsum {

/// Identifies one reproducible random stream. The pair (master_seed,
/// stream_index) maps to an RNG stream injectively; experiments assign one
/// stream per replicate so that results do not depend on scheduling.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;
};

/// Salts separating the independent streams a single SeedSpec can spawn
/// (e.g. the P and Q draws inside one replicate).
enum class StreamPurpose : std::uint64_t {
  primary = 0,
  second_projection = 1,
  count_jitter = 2,
  resample = 16,  // added on the one permitted retry after a degenerate draw
};

/// Deterministic random stream: mt19937_64 seeded from the full
/// (master_seed, stream_index, salt) tuple, with normal variates generated
/// by the Marsaglia polar method. Every draw path is fixed by this class,
/// so identical seeds give bit-identical samples on any build of this
/// library regardless of thread count.
class RngStream {
 public:
  explicit RngStream(const SeedSpec& seed, std::uint64_t salt = 0) {
    const auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
    const auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
    std::seed_seq seq{lo(seed.master_seed), hi(seed.master_seed),
                      lo(seed.stream_index), hi(seed.stream_index),
                      lo(salt), hi(salt), 0x70726a73u};
    engine_.seed(seq);
  }
  RngStream(const SeedSpec& seed, StreamPurpose purpose)
      : RngStream(seed, static_cast<std::uint64_t>(purpose)) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on (0, 1].
  double uniform01() {
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  }

  /// Standard normal variate.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform01() - 1.0;
      v = 2.0 * uniform01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double scale = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * scale;
    has_spare_ = true;
    return u * scale;
  }

  /// Complex variate with independent N(0,1) real and imaginary parts.
  std::complex<double> complex_gaussian() {
    const double re = gaussian();
    return {re, gaussian()};
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace projsum
