#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace projsum {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
};

struct AcceptanceOptions {
  std::uint64_t master_seed = 42;
  unsigned threads = 0;           // 0 = PROJSUM_THREADS or hardware
  std::vector<int> criteria;      // empty = all
  /// Called as each criterion finishes; used for live progress output.
  std::function<void(const CriterionResult&)> on_result;
};

/// Runs the end-to-end verification suite (thirteen seeded criteria
/// covering the eigenvalue correspondence, kernel limits, hard- and
/// soft-edge statistics, counting CLT, densities, and determinism) and
/// returns one result per criterion.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

}  // namespace projsum
