#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "splitflow/errors.hpp"
#include "splitflow/io/csv.hpp"
#include "splitflow/io/svg_plot.hpp"
#include "splitflow/oracle/convergence.hpp"
#include "splitflow/tools/cli.hpp"
#include "splitflow/tools/commands.hpp"
#include "splitflow/tools/run_config.hpp"
#include "splitflow/torus.hpp"

using namespace splitflow;
using namespace splitflow::tools;

namespace {

namespace fs = std::filesystem;

/// Fresh scratch directory per test case; removed on destruction.
struct ScratchDir {
  fs::path path;

  explicit ScratchDir(const std::string& name)
      : path(fs::temp_directory_path() / ("splitflow_test_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~ScratchDir() { fs::remove_all(path); }

  [[nodiscard]] std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(static_cast<bool>(in));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  REQUIRE(static_cast<bool>(out));
  out << text;
}

TorusField random_field(const TorusGrid& grid, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::vector<cplx> values(grid.size());
  for (auto& v : values) v = cplx(coef(rng), coef(rng));
  return TorusField(grid, FieldRepr::nodes, std::move(values));
}

/// Runs the CLI with stdout captured, so test logs stay quiet and the
/// listing text can be asserted on.
int run_cli_captured(const std::vector<std::string>& args, std::string* out) {
  std::ostringstream capture;
  std::streambuf* old = std::cout.rdbuf(capture.rdbuf());
  int code = -1;
  try {
    code = run_cli(args);
  } catch (...) {
    std::cout.rdbuf(old);
    throw;
  }
  std::cout.rdbuf(old);
  if (out != nullptr) *out = capture.str();
  return code;
}

}  // namespace

TEST_CASE("field CSV round trip is exact") {
  const ScratchDir dir("field_csv");
  const TorusGrid grid(33);
  const TorusField original = random_field(grid, 7);

  const std::string path = dir.file("field.csv");
  io::write_field_csv(path, original);
  const TorusField reloaded = io::read_field_csv(path);

  REQUIRE(reloaded.size() == original.size());
  CHECK(reloaded.repr() == FieldRepr::nodes);
  for (std::size_t q = 0; q < original.size(); ++q) {
    // 17 significant digits round-trip doubles exactly.
    CHECK(reloaded[q] == original[q]);
  }

  const std::string text = read_text(path);
  CHECK(text.rfind("q,x,re,im\n", 0) == 0);
}

TEST_CASE("field CSV rejects malformed input") {
  const ScratchDir dir("field_csv_bad");
  const std::string path = dir.file("bad.csv");

  write_text(path, "wrong,header\n");
  CHECK_THROWS_AS((void)io::read_field_csv(path), Error);

  write_text(path, "q,x,re,im\n0,0.0,1.0\n");
  CHECK_THROWS_AS((void)io::read_field_csv(path), Error);

  write_text(path, "q,x,re,im\n0,0.0,abc,0.0\n");
  CHECK_THROWS_AS((void)io::read_field_csv(path), Error);

  CHECK_THROWS_AS((void)io::read_field_csv(dir.file("missing.csv")), Error);
}

TEST_CASE("trajectory CSV format") {
  const ScratchDir dir("trajectory_csv");
  const std::string path = dir.file("trajectory.csv");
  io::write_trajectory_csv(path, {0.0, 0.5, 1.0}, {1.0, 1.0 + 1e-13, 1.0});

  const std::string text = read_text(path);
  std::istringstream lines(text);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "k,t,norm_l2");
  REQUIRE(std::getline(lines, line));
  CHECK(line == "0,0,1");
  REQUIRE(std::getline(lines, line));
  CHECK(line.rfind("1,0.5,", 0) == 0);

  CHECK_THROWS_AS(io::write_trajectory_csv(path, {0.0, 1.0}, {1.0}), Error);
}

TEST_CASE("report CSV carries rows and the fit summary comment") {
  const ScratchDir dir("report_csv");
  oracle::ConvergenceReport report;
  report.rows = {{8.0, 0.125, 1e-2, 2e-2}, {16.0, 0.0625, 5e-3, 1e-2}};
  report.slope = 1.0;
  report.r2 = 0.999;

  const std::string path = dir.file("report.csv");
  io::write_report_csv(path, report);

  const std::string text = read_text(path);
  CHECK(text.rfind("res,h,err_l2,err_linf\n", 0) == 0);
  CHECK(text.find("8,0.125,0.01,0.02\n") != std::string::npos);
  CHECK(text.find("# slope=1 r2=0.999") != std::string::npos);
}

TEST_CASE("loglog SVG is written with markers and slope annotation") {
  const ScratchDir dir("svg");
  io::LogLogPlot plot;
  plot.title = "test plot";
  plot.points = {{0.1, 1e-2}, {0.05, 5e-3}, {0.025, 2.5e-3}};
  plot.slope = 1.0;
  plot.has_slope = true;

  const std::string path = dir.file("plot.svg");
  io::write_loglog_svg(path, plot);

  const std::string text = read_text(path);
  CHECK(text.find("<svg") != std::string::npos);
  CHECK(text.find("polyline") != std::string::npos);
  CHECK(text.find("fitted slope = 1.000") != std::string::npos);
  CHECK(text.find("test plot") != std::string::npos);

  // Nonpositive points are skipped rather than breaking the log mapping.
  io::LogLogPlot degenerate;
  degenerate.points = {{0.1, 0.0}, {-1.0, 1.0}};
  degenerate.annotation = "all errors at floor";
  io::write_loglog_svg(dir.file("empty.svg"), degenerate);
  const std::string empty_text = read_text(dir.file("empty.svg"));
  CHECK(empty_text.find("polyline") == std::string::npos);
  CHECK(empty_text.find("all errors at floor") != std::string::npos);
}

TEST_CASE("config parsing: defaults, full assignment, strictness") {
  const RunConfig defaults = parse_config("{}");
  CHECK(defaults.problem == "sp");
  CHECK(defaults.scheme == "strang");
  CHECK(defaults.m == 257);
  CHECK(defaults.T == 0.5);
  CHECK(defaults.alpha == 0.01);
  CHECK(defaults.kernel == "none");

  const RunConfig full = parse_config(R"({
    "problem": "nls", "scheme": "lie", "m": 65, "n": 128,
    "n_list": [8, 16], "m_list": [33, 65], "T": 1.0, "alpha": 0.5,
    "nu": 2.0, "kernel": "green", "ref_n": 1024, "ref_m": 517,
    "seed": 42, "out": "results"
  })");
  CHECK(full.problem == "nls");
  CHECK(full.scheme == "lie");
  CHECK(full.m == 65);
  CHECK(full.n == 128);
  CHECK(full.n_list == std::vector<std::size_t>{8, 16});
  CHECK(full.m_list == std::vector<std::size_t>{33, 65});
  CHECK(full.T == 1.0);
  CHECK(full.alpha == 0.5);
  CHECK(full.nu == 2.0);
  CHECK(full.kernel == "green");
  CHECK(full.ref_n == 1024);
  CHECK(full.ref_m == 517);
  CHECK(full.seed == 42);
  CHECK(full.out == "results");

  const RunConfig custom = parse_config(R"({"kernel": [1.0, 0.5, 0.5]})");
  CHECK(custom.kernel == "custom");
  CHECK(custom.kernel_values == std::vector<double>{1.0, 0.5, 0.5});

  CHECK_THROWS_AS((void)parse_config("not json"), ConfigError);
  CHECK_THROWS_AS((void)parse_config("[1, 2]"), ConfigError);
  CHECK_THROWS_AS((void)parse_config(R"({"problm": "sp"})"), ConfigError);
  CHECK_THROWS_AS((void)parse_config(R"({"m": "lots"})"), ConfigError);
  CHECK_THROWS_AS((void)parse_config(R"({"m": -3})"), ConfigError);
  CHECK_THROWS_AS((void)parse_config(R"({"T": "late"})"), ConfigError);
  CHECK_THROWS_AS((void)parse_config(R"({"n_list": [1, "two"]})"), ConfigError);
  CHECK_THROWS_AS((void)parse_config(R"({"kernel": "sombrero"})"), ConfigError);
  CHECK_THROWS_AS((void)parse_config(R"({"kernel": 7})"), ConfigError);

  // Error messages carry the offending key.
  try {
    (void)parse_config(R"({"stepz": 4})");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("stepz") != std::string::npos);
  }
}

TEST_CASE("config validation: per-command invariants") {
  RunConfig config;

  SUBCASE("common checks") {
    config.problem = "heat";
    CHECK_THROWS_AS(validate_for_solve(config), ConfigError);
    config.problem = "sp";
    config.scheme = "euler";
    CHECK_THROWS_AS(validate_for_solve(config), ConfigError);
    config.scheme = "lie";
    config.m = 64;
    CHECK_THROWS_AS(validate_for_solve(config), ConfigError);
    config.m = 65;
    config.T = 0.0;
    CHECK_THROWS_AS(validate_for_solve(config), ConfigError);
    config.T = 0.5;
    config.alpha = -0.1;
    CHECK_THROWS_AS(validate_for_solve(config), ConfigError);
    config.alpha = 0.1;
    config.out = "";
    CHECK_THROWS_AS(validate_for_solve(config), ConfigError);
    config.out = ".";
    CHECK_NOTHROW(validate_for_solve(config));
  }

  SUBCASE("solve needs n >= 1 and a matching custom kernel") {
    config.n = 0;
    CHECK_THROWS_AS(validate_for_solve(config), ConfigError);
    config.n = 4;
    config.problem = "nls";
    config.kernel = "custom";
    config.kernel_values = {1.0, 2.0};  // m = 257 expected
    CHECK_THROWS_AS(validate_for_solve(config), ConfigError);
    config.kernel_values.assign(config.m, 0.0);
    CHECK_NOTHROW(validate_for_solve(config));
  }

  SUBCASE("converge-time needs an ascending n_list and a big even ref_n") {
    config.n_list = {};
    CHECK_THROWS_AS(validate_for_converge_time(config), ConfigError);
    config.n_list = {16, 8};
    CHECK_THROWS_AS(validate_for_converge_time(config), ConfigError);
    config.n_list = {8, 16};
    config.ref_n = 64;  // < 8 x 16
    CHECK_THROWS_AS(validate_for_converge_time(config), ConfigError);
    config.ref_n = 129;  // odd
    CHECK_THROWS_AS(validate_for_converge_time(config), ConfigError);
    config.ref_n = 128;
    CHECK_NOTHROW(validate_for_converge_time(config));
  }

  SUBCASE("converge-space needs odd ascending grids on a torus problem") {
    config.m_list = {33, 65};
    config.ref_m = 261;
    CHECK_NOTHROW(validate_for_converge_space(config));
    config.problem = "wave";
    CHECK_THROWS_AS(validate_for_converge_space(config), ConfigError);
    config.problem = "sp";
    config.m_list = {33, 64};
    CHECK_THROWS_AS(validate_for_converge_space(config), ConfigError);
    config.m_list = {65, 33};
    CHECK_THROWS_AS(validate_for_converge_space(config), ConfigError);
    config.m_list = {33, 65};
    config.ref_m = 259;  // < 4 x 65
    CHECK_THROWS_AS(validate_for_converge_space(config), ConfigError);
    config.ref_m = 260;  // even
    CHECK_THROWS_AS(validate_for_converge_space(config), ConfigError);
    config.ref_m = 261;
    config.problem = "nls";
    config.kernel = "custom";
    config.kernel_values.assign(33, 1.0);
    CHECK_THROWS_AS(validate_for_converge_space(config), ConfigError);
  }
}

TEST_CASE("cli: schemes listing") {
  std::string out;
  const int code = run_cli_captured({"schemes"}, &out);
  CHECK(code == 0);
  CHECK(out.find("lie") != std::string::npos);
  CHECK(out.find("strang") != std::string::npos);
  CHECK(out.find("yoshida4") != std::string::npos);
  CHECK(out.find("empirically certified order 4") != std::string::npos);
}

TEST_CASE("cli: solve writes trajectory and state, deterministically") {
  const ScratchDir dir("cli_solve");
  const std::string config_path = dir.file("run.json");
  write_text(config_path, R"({
    "problem": "sp", "scheme": "lie", "m": 33, "n": 16,
    "T": 0.1, "alpha": 0.5, "out": ")" + dir.file("out1") + R"("
  })");

  std::string log;
  REQUIRE(run_cli_captured({"solve", "--config", config_path}, &log) == 0);
  CHECK(log.find("steps taken: 16/16") != std::string::npos);
  CHECK(log.find("cost model") != std::string::npos);

  const std::string trajectory =
      read_text(dir.file("out1/solve_lie_sp_trajectory.csv"));
  CHECK(trajectory.rfind("k,t,norm_l2\n", 0) == 0);
  // 16 steps -> header + 17 rows.
  CHECK(std::count(trajectory.begin(), trajectory.end(), '\n') == 18);

  const TorusField final_state =
      io::read_field_csv(dir.file("out1/solve_lie_sp_state.csv"));
  CHECK(final_state.size() == 33);

  // Identical config, second output directory: byte-identical CSVs.
  REQUIRE(run_cli_captured({"solve", "--config", config_path, "--out",
                            dir.file("out2")},
                           nullptr) == 0);
  CHECK(read_text(dir.file("out2/solve_lie_sp_trajectory.csv")) == trajectory);
  CHECK(read_text(dir.file("out2/solve_lie_sp_state.csv")) ==
        read_text(dir.file("out1/solve_lie_sp_state.csv")));
}

TEST_CASE("cli: solve handles nls and wave problems") {
  const ScratchDir dir("cli_solve_other");
  const std::string config_path = dir.file("run.json");

  write_text(config_path, R"({
    "problem": "nls", "scheme": "strang", "m": 33, "n": 8,
    "T": 0.05, "alpha": 0.5, "kernel": "green", "out": ")" +
                               dir.file("out") + R"("
  })");
  REQUIRE(run_cli_captured({"solve", "--config", config_path}, nullptr) == 0);
  CHECK(fs::exists(dir.file("out/solve_strang_nls_state.csv")));

  write_text(config_path, R"({
    "problem": "wave", "scheme": "strang", "m": 129, "n": 8,
    "T": 0.25, "nu": 1.0, "out": ")" + dir.file("out") + R"("
  })");
  REQUIRE(run_cli_captured({"solve", "--config", config_path}, nullptr) == 0);
  CHECK(fs::exists(dir.file("out/solve_strang_wave_trajectory.csv")));
  CHECK(fs::exists(dir.file("out/solve_strang_wave_state_u1.csv")));
  CHECK(fs::exists(dir.file("out/solve_strang_wave_state_u2.csv")));
}

TEST_CASE("cli: flag overrides replace config fields") {
  const ScratchDir dir("cli_overrides");
  const std::string config_path = dir.file("run.json");
  write_text(config_path, R"({
    "problem": "sp", "scheme": "lie", "m": 33, "n": 8,
    "T": 0.1, "alpha": 0.5, "out": ")" + dir.file("out") + R"("
  })");

  std::string log;
  REQUIRE(run_cli_captured({"solve", "--config", config_path, "--scheme",
                            "strang", "--n", "4", "--m", "15", "--T", "0.05",
                            "--alpha", "0.25"},
                           &log) == 0);
  CHECK(log.find("scheme=strang") != std::string::npos);
  CHECK(log.find("m=15") != std::string::npos);
  CHECK(log.find("steps taken: 4/4") != std::string::npos);
  CHECK(fs::exists(dir.file("out/solve_strang_sp_trajectory.csv")));

  // An override can also break the config; that is still exit 2.
  CHECK(run_cli_captured({"solve", "--config", config_path, "--m", "16"},
                         nullptr) == 2);
}

TEST_CASE("cli: converge-time produces report, svg and slope line") {
  const ScratchDir dir("cli_time");
  const std::string config_path = dir.file("run.json");
  write_text(config_path, R"({
    "problem": "sp", "scheme": "lie", "m": 33, "n_list": [8, 16, 32],
    "ref_n": 256, "T": 0.25, "alpha": 0.5, "out": ")" +
                              dir.file("out") + R"("
  })");

  std::string log;
  REQUIRE(run_cli_captured({"converge-time", "--config", config_path}, &log) ==
          0);
  CHECK(log.find("fitted slope") != std::string::npos);

  const std::string report =
      read_text(dir.file("out/converge-time_lie_sp.csv"));
  CHECK(report.rfind("res,h,err_l2,err_linf\n", 0) == 0);
  CHECK(report.find("# slope=") != std::string::npos);
  CHECK(fs::exists(dir.file("out/converge-time_lie_sp.svg")));
}

TEST_CASE("cli: converge-space produces report and svg") {
  const ScratchDir dir("cli_space");
  const std::string config_path = dir.file("run.json");
  // Grids start at m = 33: on coarser grids the rough datum's quadrature
  // gap exceeds the Poisson neutrality tolerance and the solve refuses.
  write_text(config_path, R"({
    "problem": "sp", "scheme": "strang", "m_list": [33, 65, 129],
    "ref_m": 517, "n": 50, "T": 0.05, "alpha": 0.01, "out": ")" +
                              dir.file("out") + R"("
  })");

  std::string log;
  REQUIRE(run_cli_captured({"converge-space", "--config", config_path},
                           &log) == 0);
  const std::string report =
      read_text(dir.file("out/converge-space_strang_sp.csv"));
  CHECK(report.rfind("res,h,err_l2,err_linf\n", 0) == 0);
  CHECK(fs::exists(dir.file("out/converge-space_strang_sp.svg")));
}

TEST_CASE("shipped preset configs parse and validate") {
  const fs::path configs(SPLITFLOW_CONFIGS_DIR);
  REQUIRE(fs::is_directory(configs));
  std::size_t seen = 0;
  for (const auto& entry : fs::directory_iterator(configs)) {
    if (entry.path().extension() != ".json") continue;
    ++seen;
    INFO("config: ", entry.path().string());
    const RunConfig config = load_config(entry.path().string());
    const std::string stem = entry.path().stem().string();
    if (stem.rfind("solve", 0) == 0) {
      CHECK_NOTHROW(validate_for_solve(config));
    } else if (stem.rfind("converge_time", 0) == 0) {
      CHECK_NOTHROW(validate_for_converge_time(config));
    } else if (stem.rfind("converge_space", 0) == 0) {
      CHECK_NOTHROW(validate_for_converge_space(config));
    } else {
      FAIL("preset with unrecognized command prefix: ", stem);
    }
  }
  CHECK(seen >= 6);  // the shipped desk and full-scale presets
}

TEST_CASE("cli: exit codes for config and convergence failures") {
  const ScratchDir dir("cli_exit");
  const std::string config_path = dir.file("run.json");

  // Missing config file.
  CHECK(run_cli_captured({"solve", "--config", dir.file("absent.json")},
                         nullptr) == 2);

  // Unknown key.
  write_text(config_path, R"({"problm": "sp"})");
  CHECK(run_cli_captured({"solve", "--config", config_path}, nullptr) == 2);

  // Invalid value.
  write_text(config_path, R"({"problem": "sp", "m": 16})");
  CHECK(run_cli_captured({"solve", "--config", config_path}, nullptr) == 2);

  // Usage errors: unknown subcommand / unknown flag.
  CHECK(run_cli_captured({"frobnicate"}, nullptr) == 2);
  CHECK(run_cli_captured({"solve", "--config", config_path, "--bogus", "1"},
                         nullptr) == 2);

  // A fourth-order scheme measured against a strang reference of modest
  // resolution drives the measured errors below the reference's own
  // Richardson gap: the self-check must refuse, exit 3.
  write_text(config_path, R"({
    "problem": "sp", "scheme": "yoshida4", "m": 33, "n_list": [16, 32, 64],
    "ref_n": 512, "T": 0.25, "alpha": 0.5, "out": ")" +
                              dir.file("out") + R"("
  })");
  CHECK(run_cli_captured({"converge-time", "--config", config_path},
                         nullptr) == 3);
}
