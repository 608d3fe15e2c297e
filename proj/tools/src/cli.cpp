#include "splitflow/tools/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "splitflow/errors.hpp"
#include "splitflow/tools/commands.hpp"
#include "splitflow/tools/run_config.hpp"

namespace splitflow::tools {

namespace {

/// Flag override targets shared by the three config-driven subcommands; the
/// option pointers let us tell "flag given" apart from "default value".
struct RunFlags {
  std::string config_path;
  std::size_t m = 0;
  std::size_t n = 0;
  double T = 0.0;
  double alpha = 0.0;
  std::string scheme;
  std::string problem;
  std::string out;

  CLI::Option* m_opt = nullptr;
  CLI::Option* n_opt = nullptr;
  CLI::Option* T_opt = nullptr;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* scheme_opt = nullptr;
  CLI::Option* problem_opt = nullptr;
  CLI::Option* out_opt = nullptr;
};

void add_run_options(CLI::App* cmd, RunFlags& flags) {
  cmd->add_option("--config", flags.config_path, "JSON run configuration")
      ->required();
  flags.out_opt = cmd->add_option("--out", flags.out, "output directory");
  flags.m_opt = cmd->add_option("--m", flags.m, "grid size (odd)");
  flags.n_opt = cmd->add_option("--n", flags.n, "time step count");
  flags.T_opt = cmd->add_option("--T", flags.T, "final time");
  flags.scheme_opt =
      cmd->add_option("--scheme", flags.scheme, "lie | strang | yoshida4");
  flags.problem_opt =
      cmd->add_option("--problem", flags.problem, "sp | nls | wave");
  flags.alpha_opt =
      cmd->add_option("--alpha", flags.alpha, "datum roughness parameter");
}

RunConfig config_with_overrides(const RunFlags& flags) {
  RunConfig config = load_config(flags.config_path);
  if (flags.m_opt->count() > 0) config.m = flags.m;
  if (flags.n_opt->count() > 0) config.n = flags.n;
  if (flags.T_opt->count() > 0) config.T = flags.T;
  if (flags.alpha_opt->count() > 0) config.alpha = flags.alpha;
  if (flags.scheme_opt->count() > 0) config.scheme = flags.scheme;
  if (flags.problem_opt->count() > 0) config.problem = flags.problem;
  if (flags.out_opt->count() > 0) config.out = flags.out;
  return config;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"split-step spectral solver experiments"};
  app.require_subcommand(1);

  RunFlags solve_flags;
  RunFlags time_flags;
  RunFlags space_flags;
  CLI::App* solve =
      app.add_subcommand("solve", "run one fixed-step evolution");
  CLI::App* converge_time = app.add_subcommand(
      "converge-time", "time-convergence sweep against a reference run");
  CLI::App* converge_space = app.add_subcommand(
      "converge-space", "space-convergence sweep against a fine grid");
  CLI::App* schemes =
      app.add_subcommand("schemes", "list the splitting scheme catalogue");
  add_run_options(solve, solve_flags);
  add_run_options(converge_time, time_flags);
  add_run_options(converge_space, space_flags);

  std::vector<std::string> argv_strings;
  argv_strings.reserve(args.size() + 1);
  argv_strings.push_back("splitflow");
  for (const auto& arg : args) argv_strings.push_back(arg);
  std::vector<const char*> argv;
  argv.reserve(argv_strings.size());
  for (const auto& s : argv_strings) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (schemes->parsed()) {
      cmd_schemes(std::cout);
    } else if (solve->parsed()) {
      cmd_solve(config_with_overrides(solve_flags), std::cout);
    } else if (converge_time->parsed()) {
      cmd_converge_time(config_with_overrides(time_flags), std::cout);
    } else {
      cmd_converge_space(config_with_overrides(space_flags), std::cout);
    }
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ReferenceNotConvergedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const OracleNotConvergedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace splitflow::tools
