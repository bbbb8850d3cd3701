#include "projsum/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace projsum {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) parts.push_back(trim(item));
  if (!s.empty() && s.back() == sep) parts.push_back("");
  return parts;
}

}  // namespace

std::map<std::string, std::string> parse_key_values(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#' || text[0] == ';') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno), "expected 'key = value'");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno), "empty key");
    if (!kv.emplace(key, value).second) throw ConfigError(key, "duplicate key");
  }
  return kv;
}

std::map<std::string, std::string> parse_key_value_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open config file");
  return parse_key_values(in);
}

std::optional<ExperimentMode> parse_mode(std::string_view name) {
  if (name == "counting") return ExperimentMode::counting;
  if (name == "variance-growth" || name == "variance_growth")
    return ExperimentMode::variance_growth;
  if (name == "hard-edge" || name == "hard_edge") return ExperimentMode::hard_edge;
  if (name == "soft-edge" || name == "soft_edge") return ExperimentMode::soft_edge;
  return std::nullopt;
}

namespace {

class SchemaReader {
 public:
  explicit SchemaReader(const std::map<std::string, std::string>& kv) : kv_(kv) {}

  bool has(const std::string& key) {
    seen_.insert(key);
    return kv_.count(key) > 0;
  }

  const std::string& raw(const std::string& key) {
    seen_.insert(key);
    const auto it = kv_.find(key);
    if (it == kv_.end()) throw ConfigError(key, "required key is missing");
    return it->second;
  }

  long long integer(const std::string& key) {
    const std::string& text = raw(key);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
      throw ConfigError(key, "expected an integer, got '" + text + "'");
    return value;
  }

  double real(const std::string& key) {
    const std::string& text = raw(key);
    try {
      std::size_t pos = 0;
      const double value = std::stod(text, &pos);
      if (pos != text.size()) throw std::invalid_argument("");
      return value;
    } catch (const std::exception&) {
      throw ConfigError(key, "expected a real number, got '" + text + "'");
    }
  }

  std::vector<double> real_list(const std::string& key) {
    std::vector<double> values;
    for (const auto& part : split(raw(key), ',')) {
      try {
        std::size_t pos = 0;
        values.push_back(std::stod(part, &pos));
        if (pos != part.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ConfigError(key, "expected comma-separated reals, got '" + part + "'");
      }
    }
    return values;
  }

  std::vector<int> int_list(const std::string& key) {
    std::vector<int> values;
    for (double v : real_list(key)) {
      if (v != std::floor(v)) throw ConfigError(key, "expected integers");
      values.push_back(static_cast<int>(v));
    }
    return values;
  }

  void reject_unknown() const {
    for (const auto& [key, value] : kv_)
      if (!seen_.count(key)) throw ConfigError(key, "unknown key");
  }

 private:
  const std::map<std::string, std::string>& kv_;
  std::set<std::string> seen_;
};

}  // namespace

ResolvedExperiment build_experiment_config(ExperimentMode mode,
                                           const std::map<std::string, std::string>& kv,
                                           std::optional<std::uint64_t> seed_override) {
  SchemaReader reader(kv);

  const int n = static_cast<int>(reader.integer("n"));
  const int p = static_cast<int>(reader.integer("p"));
  const int q = static_cast<int>(reader.integer("q"));
  const double theta = reader.has("theta") ? reader.real("theta") : 1.0;
  const int beta = reader.has("beta") ? static_cast<int>(reader.integer("beta")) : 2;
  const int replicates = static_cast<int>(reader.integer("replicates"));

  std::uint64_t seed = 0;
  if (seed_override) {
    if (reader.has("seed")) (void)reader.raw("seed");  // CLI --seed wins, key still known
    seed = *seed_override;
  } else {
    seed = static_cast<std::uint64_t>(reader.integer("seed"));
  }

  ExperimentConfig config{
      EnsembleParams(n, p, q, theta, beta), mode, replicates, seed, {}, {}, {}, 0};
  if (reader.has("threads")) config.threads = static_cast<unsigned>(reader.integer("threads"));

  ExperimentAssertions assertions;
  const auto read_interval = [&reader]() {
    const double lo = reader.real("interval_lo");
    const double hi = reader.real("interval_hi");
    return Interval::open(lo, hi);
  };
  switch (mode) {
    case ExperimentMode::counting:
      config.interval = read_interval();
      if (reader.has("assert_ks_max")) assertions.ks_max = reader.real("assert_ks_max");
      break;
    case ExperimentMode::variance_growth:
      config.interval = read_interval();
      config.n_ladder = reader.int_list("n_ladder");
      if (reader.has("assert_slope_min")) assertions.slope_min = reader.real("assert_slope_min");
      if (reader.has("assert_slope_max")) assertions.slope_max = reader.real("assert_slope_max");
      break;
    case ExperimentMode::hard_edge:
      config.t_grid = reader.real_list("t_grid");
      if (reader.has("assert_se_multiple"))
        assertions.se_multiple = reader.real("assert_se_multiple");
      break;
    case ExperimentMode::soft_edge:
      if (reader.has("assert_ks_max")) assertions.ks_max = reader.real("assert_ks_max");
      break;
  }
  reader.reject_unknown();
  return {std::move(config), assertions};
}

std::vector<AssertionResult> evaluate_assertions(const ExperimentReport& report,
                                                 const ExperimentAssertions& assertions) {
  std::vector<AssertionResult> results;
  if (assertions.ks_max) {
    double observed = 0.0;
    if (report.counting) observed = report.counting->ks_vs_normal;
    if (report.soft_edge) observed = report.soft_edge->ks_vs_tw;
    results.push_back({"ks_max", observed <= *assertions.ks_max, observed, *assertions.ks_max});
  }
  if (assertions.se_multiple && report.hard_edge) {
    double worst = 0.0;
    for (const auto& pt : report.hard_edge->points) {
      const double se = pt.std_error > 0.0 ? pt.std_error : 1e-300;
      worst = std::max(worst, std::abs(pt.empirical_mean - pt.theory) / se);
    }
    results.push_back({"se_multiple", worst <= *assertions.se_multiple, worst,
                       *assertions.se_multiple});
  }
  if (assertions.slope_min && report.variance_growth) {
    const double slope = report.variance_growth->slope;
    results.push_back({"slope_min", slope >= *assertions.slope_min, slope, *assertions.slope_min});
  }
  if (assertions.slope_max && report.variance_growth) {
    const double slope = report.variance_growth->slope;
    results.push_back({"slope_max", slope <= *assertions.slope_max, slope, *assertions.slope_max});
  }
  return results;
}

}  // namespace projsum
