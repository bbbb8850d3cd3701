#include "projsum/reporting.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "projsum/version.hpp"

namespace projsum {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string spectrum_csv(const Spectrum& spec) {
  struct Row {
    double value;
    const char* kind;
  };
  std::vector<Row> rows;
  rows.reserve(spec.total_dim);
  for (int i = 0; i < spec.atom_at_zero; ++i) rows.push_back({0.0, "atom_zero"});
  for (int i = 0; i < spec.atom_at_theta; ++i) rows.push_back({spec.theta, "atom_theta"});
  for (double v : spec.continuous_eigenvalues) rows.push_back({v, "continuous"});
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row& a, const Row& b) { return a.value < b.value; });

  std::ostringstream out;
  out << "index,value,kind\n";
  for (std::size_t i = 0; i < rows.size(); ++i)
    out << i << ',' << format_double(rows[i].value) << ',' << rows[i].kind << '\n';
  return out.str();
}

std::string density_csv(const LimitShape& shape, const std::string& label, int grid_points) {
  std::ostringstream out;
  out << "# projsum density " << label << '\n';
  out << "# support:";
  for (const auto& iv : shape.intervals)
    out << " [" << format_double(iv.lo) << ',' << format_double(iv.hi) << ']';
  out << '\n';
  out << "x,density\n";
  for (const auto& iv : shape.intervals) {
    const double width = iv.length() / grid_points;
    for (int j = 0; j < grid_points; ++j) {
      const double x = iv.lo + (j + 0.5) * width;
      out << format_double(x) << ',' << format_double(shape.density(x)) << '\n';
    }
  }
  double mass = shape.total_mass(1e-8);
  out << "# atoms:";
  if (shape.atoms.empty()) out << " none";
  for (const auto& atom : shape.atoms)
    out << " (" << format_double(atom.location) << ',' << format_double(atom.weight) << ')';
  out << '\n';
  out << "# total_mass: " << format_double(mass) << '\n';
  return out.str();
}

namespace {

ordered_json interval_json(const Interval& iv) {
  return ordered_json{{"lo", iv.lo},
                      {"hi", iv.hi},
                      {"closed_lo", iv.closed_lo},
                      {"closed_hi", iv.closed_hi}};
}

ordered_json config_json(const ExperimentConfig& cfg) {
  ordered_json j{{"mode", to_string(cfg.mode)},
                 {"dimension", cfg.params.dimension},
                 {"p_rank", cfg.params.p_rank},
                 {"q_rank", cfg.params.q_rank},
                 {"theta", cfg.params.theta},
                 {"beta", cfg.params.beta},
                 {"replicates", cfg.replicates},
                 {"master_seed", cfg.master_seed},
                 {"threads", cfg.threads}};
  if (cfg.interval) j["interval"] = interval_json(*cfg.interval);
  if (!cfg.t_grid.empty()) j["t_grid"] = cfg.t_grid;
  if (!cfg.n_ladder.empty()) j["n_ladder"] = cfg.n_ladder;
  return j;
}

}  // namespace

std::string experiment_report_json(const ExperimentReport& report,
                                   const std::vector<AssertionResult>& assertions) {
  ordered_json j;
  j["tool_version"] = kVersion;
  j["config"] = config_json(report.config);

  ordered_json results;
  if (report.counting) {
    const auto& c = *report.counting;
    results["mean_count"] = c.mean_count;
    results["var_count"] = c.var_count;
    results["ks_vs_normal"] = c.ks_vs_normal;
  }
  if (report.variance_growth) {
    const auto& v = *report.variance_growth;
    ordered_json ladder = ordered_json::array();
    for (const auto& pt : v.ladder)
      ladder.push_back(ordered_json{{"dimension", pt.dimension},
                                    {"mean_count", pt.mean_count},
                                    {"var_count", pt.var_count}});
    results["ladder"] = std::move(ladder);
    results["slope_vs_log_n"] = v.slope;
    results["intercept"] = v.intercept;
  }
  if (report.hard_edge) {
    ordered_json points = ordered_json::array();
    for (const auto& pt : report.hard_edge->points)
      points.push_back(ordered_json{{"t", pt.t},
                                    {"empirical_mean", pt.empirical_mean},
                                    {"std_error", pt.std_error},
                                    {"theory", pt.theory}});
    results["points"] = std::move(points);
  }
  if (report.soft_edge) {
    const auto& e = *report.soft_edge;
    results["center"] = e.center;
    results["scale_fitted"] = e.scale_fitted;
    results["sample_mean"] = e.sample_mean;
    results["sample_skewness"] = e.sample_skewness;
    results["ks_vs_tw"] = e.ks_vs_tw;
  }
  j["results"] = std::move(results);

  ordered_json checks = ordered_json::array();
  for (const auto& a : assertions)
    checks.push_back(ordered_json{
        {"name", a.name}, {"pass", a.pass}, {"observed", a.observed}, {"limit", a.limit}});
  j["assertions"] = std::move(checks);
  return j.dump(2) + "\n";
}

std::string experiment_samples_csv(const ExperimentReport& report) {
  std::ostringstream out;
  if (report.counting) {
    const auto& c = *report.counting;
    out << "replicate,count,normalized\n";
    for (std::size_t r = 0; r < c.counts.size(); ++r)
      out << r << ',' << c.counts[r] << ',' << format_double(c.normalized_samples[r]) << '\n';
  } else if (report.variance_growth) {
    const auto& v = *report.variance_growth;
    out << "dimension,replicate,count\n";
    for (std::size_t rung = 0; rung < v.counts.size(); ++rung)
      for (std::size_t r = 0; r < v.counts[rung].size(); ++r)
        out << v.ladder[rung].dimension << ',' << r << ',' << v.counts[rung][r] << '\n';
  } else if (report.hard_edge) {
    const auto& h = *report.hard_edge;
    out << "t,replicate,count\n";
    for (std::size_t i = 0; i < h.counts.size(); ++i)
      for (std::size_t r = 0; r < h.counts[i].size(); ++r)
        out << format_double(h.points[i].t) << ',' << r << ',' << h.counts[i][r] << '\n';
  } else if (report.soft_edge) {
    const auto& e = *report.soft_edge;
    out << "replicate,lambda_max,scaled\n";
    for (std::size_t r = 0; r < e.raw_max.size(); ++r)
      out << r << ',' << format_double(e.raw_max[r]) << ','
          << format_double(e.scaled_samples[r]) << '\n';
  }
  return out.str();
}

std::string run_manifest_json(const ExperimentReport& report, const std::string& command_line,
                              const std::string& started_at, const std::string& finished_at,
                              const std::vector<std::string>& output_paths) {
  ordered_json j;
  j["tool_version"] = kVersion;
  j["command"] = command_line;
  j["config"] = config_json(report.config);
  j["started_at"] = started_at;
  j["finished_at"] = finished_at;
  j["output_paths"] = output_paths;
  return j.dump(2) + "\n";
}

}  // namespace projsum
