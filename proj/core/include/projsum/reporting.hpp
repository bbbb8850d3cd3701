#pragma once

#include <string>
#include <vector>

#include "projsum/config.hpp"
#include "projsum/densities.hpp"
#include "projsum/spectra.hpp"
#include "projsum/stats.hpp"

namespace projsum {

/// Shortest representation that round-trips a double exactly (17
/// significant digits); keeps byte-identical outputs meaningful.
std::string format_double(double value);

/// CSV with header `index,value,kind`, one row per eigenvalue ascending;
/// kind is continuous, atom_zero or atom_theta.
std::string spectrum_csv(const Spectrum& spec);

/// CSV of density grid rows `x,density` (grid_points midpoint samples per
/// support interval), preceded by comment metadata naming the support and
/// followed by a trailing comment row with the atom list and total mass.
std::string density_csv(const LimitShape& shape, const std::string& label, int grid_points);

/// report.json payload: summary statistics, provenance, and assertion
/// outcomes. Contains no timestamps, so reruns are byte-identical.
std::string experiment_report_json(const ExperimentReport& report,
                                   const std::vector<AssertionResult>& assertions);

/// samples.csv payload: the raw per-replicate samples of the run.
std::string experiment_samples_csv(const ExperimentReport& report);

/// manifest.json payload: resolved configuration, tool version, wall-clock
/// timestamps and the paths written. The timestamps are the one part of an
/// experiment's output that varies between identical runs.
std::string run_manifest_json(const ExperimentReport& report, const std::string& command_line,
                              const std::string& started_at, const std::string& finished_at,
                              const std::vector<std::string>& output_paths);

}  // namespace projsum
