// End-to-end checks of the projsum binary: output formats, determinism,
// and the exit-code contract.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <doctest.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace fs = std::filesystem;

namespace {

const char* cli_path() { return PROJSUM_CLI_PATH; }

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(cli_path()) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  while (std::size_t n = fread(buffer, 1, sizeof(buffer), pipe)) output.append(buffer, n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("projsum_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

struct CsvRow {
  int index;
  double value;
  std::string kind;
};

std::vector<CsvRow> parse_spectrum_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  REQUIRE(line == "index,value,kind");
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    CsvRow row;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    row.index = std::stoi(line.substr(0, c1));
    row.value = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    row.kind = line.substr(c2 + 1);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("spectrum: pairing, atom kinds, determinism") {
  TempDir dir;
  const auto out = (dir.path / "spec.csv").string();

  auto r = run_cli("spectrum --n 2 --p 1 --q 1 --theta 1 --seed 7 --out " + out);
  CHECK(r.exit_code == 0);
  auto rows = parse_spectrum_csv(slurp(out));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].value + rows[1].value == doctest::Approx(2.0).epsilon(1e-10));

  const auto out2 = (dir.path / "spec2.csv").string();
  r = run_cli("spectrum --n 64 --p 16 --q 24 --seed 3 --out " + out2);
  CHECK(r.exit_code == 0);
  rows = parse_spectrum_csv(slurp(out2));
  REQUIRE(rows.size() == 64);
  int atom_theta = 0, atom_zero = 0;
  for (const auto& row : rows) {
    if (row.kind == "atom_theta") ++atom_theta;
    if (row.kind == "atom_zero") ++atom_zero;
  }
  CHECK(atom_theta == 8);
  CHECK(atom_zero == 24);

  // Byte-identical rerun, and the jacobi path agrees on the atom counts.
  const auto out3 = (dir.path / "spec3.csv").string();
  run_cli("spectrum --n 64 --p 16 --q 24 --seed 3 --out " + out3);
  CHECK(slurp(out2) == slurp(out3));

  const auto out4 = (dir.path / "spec4.csv").string();
  r = run_cli("spectrum --n 64 --p 16 --q 24 --seed 3 --path jacobi --out " + out4);
  CHECK(r.exit_code == 0);
  rows = parse_spectrum_csv(slurp(out4));
  REQUIRE(rows.size() == 64);

  // Rank arithmetic errors exit 2.
  r = run_cli("spectrum --n 8 --p 5 --q 6 --seed 1 --out " + (dir.path / "x.csv").string());
  CHECK(r.exit_code == 2);
}

TEST_CASE("density: arcsine values, atoms, mass in trailing comment") {
  TempDir dir;
  const auto out = (dir.path / "density.csv").string();
  auto r = run_cli("density --p 0.5 --q 0.5 --grid-points 50 --out " + out);
  CHECK(r.exit_code == 0);
  const std::string text = slurp(out);
  CHECK(text.find("# atoms: none") != std::string::npos);
  CHECK(text.find("# total_mass: ") != std::string::npos);
  // Parse one grid row and compare to the arcsine density.
  std::istringstream in(text);
  std::string line;
  bool checked = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'x') continue;
    const auto comma = line.find(',');
    const double x = std::stod(line.substr(0, comma));
    const double density = std::stod(line.substr(comma + 1));
    const double want = 1.0 / (3.14159265358979323846 * std::sqrt(x * (2.0 - x)));
    CHECK(density == doctest::Approx(want).epsilon(1e-9));
    checked = true;
    break;
  }
  CHECK(checked);

  const auto out2 = (dir.path / "atoms.csv").string();
  r = run_cli("density --p 0.3 --q 0.5 --out " + out2);
  CHECK(r.exit_code == 0);
  const std::string atoms_text = slurp(out2);
  const auto atoms_at = atoms_text.find("# atoms:");
  REQUIRE(atoms_at != std::string::npos);
  const std::string atoms_line = atoms_text.substr(atoms_at, atoms_text.find('\n', atoms_at) - atoms_at);
  double loc1 = -1, w1 = -1, loc2 = -1, w2 = -1;
  CHECK(std::sscanf(atoms_line.c_str(), "# atoms: (%lf,%lf) (%lf,%lf)", &loc1, &w1, &loc2,
                    &w2) == 4);
  CHECK(loc1 == 1.0);
  CHECK(w1 == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(loc2 == 0.0);
  CHECK(w2 == doctest::Approx(0.2).epsilon(1e-12));

  const auto out3 = (dir.path / "jacobi.csv").string();
  r = run_cli("density --s 0 --t 0 --out " + out3);
  CHECK(r.exit_code == 0);
  CHECK(slurp(out3).find("# support: [0,1]") != std::string::npos);

  r = run_cli("density --p 1.5 --q 0.5 --out " + (dir.path / "bad.csv").string());
  CHECK(r.exit_code == 2);
}

TEST_CASE("experiment: hard-edge zeros, usage errors, determinism") {
  TempDir dir;
  const auto cfg = dir.path / "cfg.ini";
  {
    std::ofstream out(cfg);
    out << "n = 64\np = 32\nq = 32\nreplicates = 200\nseed = 5\nt_grid = 0\n";
  }
  auto r = run_cli("experiment --mode hard-edge --config " + cfg.string() + " --out-dir " +
                   (dir.path / "run1").string());
  CHECK(r.exit_code == 0);
  const std::string report = slurp(dir.path / "run1" / "report.json");
  CHECK(report.find("\"empirical_mean\": 0.0") != std::string::npos);
  CHECK(report.find("\"theory\": 0.0") != std::string::npos);

  // The manifest carries the resolved config, tool version, timestamps,
  // and output paths.
  const std::string manifest = slurp(dir.path / "run1" / "manifest.json");
  for (const char* needle :
       {"\"tool_version\"", "\"master_seed\": 5", "\"replicates\": 200", "\"started_at\"",
        "\"finished_at\"", "\"samples.csv\""})
    CHECK_MESSAGE(manifest.find(needle) != std::string::npos, "missing ", needle);

  // Same seed, byte-identical report and samples.
  run_cli("experiment --mode hard-edge --config " + cfg.string() + " --out-dir " +
          (dir.path / "run2").string());
  CHECK(slurp(dir.path / "run1" / "report.json") == slurp(dir.path / "run2" / "report.json"));
  CHECK(slurp(dir.path / "run1" / "samples.csv") == slurp(dir.path / "run2" / "samples.csv"));

  // Counting interval touching 1 is a usage error (exit 2).
  const auto bad_cfg = dir.path / "bad.ini";
  {
    std::ofstream out(bad_cfg);
    out << "n = 64\np = 16\nq = 16\nreplicates = 200\nseed = 5\n"
        << "interval_lo = 0.9\ninterval_hi = 1.1\n";
  }
  r = run_cli("experiment --mode counting --config " + bad_cfg.string() + " --out-dir " +
              (dir.path / "run3").string());
  CHECK(r.exit_code == 2);

  // Unknown mode and unknown key.
  r = run_cli("experiment --mode sideways --config " + cfg.string() + " --out-dir " +
              (dir.path / "run4").string());
  CHECK(r.exit_code == 2);

  // A failing statistical assertion exits 3.
  const auto assert_cfg = dir.path / "assert.ini";
  {
    std::ofstream out(assert_cfg);
    out << "n = 64\np = 32\nq = 32\nreplicates = 200\nseed = 5\nt_grid = 1.0\n"
        << "assert_se_multiple = 0.0001\n";
  }
  r = run_cli("experiment --mode hard-edge --config " + assert_cfg.string() + " --out-dir " +
              (dir.path / "run5").string());
  CHECK(r.exit_code == 3);
}

TEST_CASE("selftest runs a fast criteria subset") {
  auto r = run_cli("selftest --criteria 3 --criteria 12");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("criterion  3 [PASS]") != std::string::npos);
  CHECK(r.stdout_text.find("criterion 12 [PASS]") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("spectrum --n 2").exit_code == 2);    // missing required flags
  CHECK(run_cli("frobnicate").exit_code == 2);        // unknown subcommand
  CHECK(run_cli("").exit_code == 2);                  // subcommand required
}
