#include "splitflow/tools/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "splitflow/errors.hpp"
#include "splitflow/evolution.hpp"
#include "splitflow/io/csv.hpp"
#include "splitflow/io/svg_plot.hpp"
#include "splitflow/oracle/studies.hpp"
#include "splitflow/problems/nls.hpp"
#include "splitflow/problems/schrodinger_poisson.hpp"
#include "splitflow/problems/wave_interaction.hpp"
#include "splitflow/scheme.hpp"
#include "splitflow/spectral.hpp"
#include "splitflow/torus.hpp"

namespace splitflow::tools {

namespace {

// The wave experiments run on the periodized interval [-2, 2]; the torus
// problems live on [0, 1).
constexpr double kWaveXMin = -2.0;
constexpr double kWaveXMax = 2.0;

std::string output_file(const RunConfig& config, const std::string& name) {
  std::filesystem::create_directories(config.out);
  return (std::filesystem::path(config.out) / name).string();
}

std::string run_tag(const std::string& command, const RunConfig& config) {
  return command + "_" + config.scheme + "_" + config.problem;
}

std::vector<cplx> build_kernel(const RunConfig& config, const TorusGrid& grid) {
  if (config.kernel == "green") {
    return problems::green_kernel_coefficients(grid);
  }
  if (config.kernel == "custom") {
    std::vector<cplx> kernel_hat(config.kernel_values.size());
    for (std::size_t p = 0; p < kernel_hat.size(); ++p) {
      kernel_hat[p] = cplx(config.kernel_values[p], 0.0);
    }
    return kernel_hat;
  }
  return {};
}

double cubic_intensity(double s) { return s; }

oracle::DiffNorms<problems::WaveInteractionState> wave_diff_norms() {
  oracle::DiffNorms<problems::WaveInteractionState> norms;
  norms.l2 = [](const problems::WaveInteractionState& a,
                const problems::WaveInteractionState& b) {
    double sum = 0.0;
    for (std::size_t q = 0; q < a.size(); ++q) {
      sum += std::norm(a.u1[q] - b.u1[q]) + std::norm(a.u2[q] - b.u2[q]);
    }
    return std::sqrt(sum * a.dx());
  };
  norms.linf = [](const problems::WaveInteractionState& a,
                  const problems::WaveInteractionState& b) {
    double worst = 0.0;
    for (std::size_t q = 0; q < a.size(); ++q) {
      worst = std::max(worst, std::abs(a.u1[q] - b.u1[q]));
      worst = std::max(worst, std::abs(a.u2[q] - b.u2[q]));
    }
    return worst;
  };
  return norms;
}

void write_wave_component_csv(const std::string& path,
                              const problems::WaveInteractionState& state,
                              const std::vector<problems::wcplx>& component) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << "q,x,re,im\n";
  for (std::size_t q = 0; q < component.size(); ++q) {
    out << q << ',' << io::full_precision(state.node(q)) << ','
        << io::full_precision(component[q].real()) << ','
        << io::full_precision(component[q].imag()) << '\n';
  }
}

/// Shared tail of cmd_solve once the problem and datum are fixed: evolve,
/// dump trajectory and final state, print the run summary.
template <class P, class State>
void solve_and_report(const RunConfig& config, const P& problem,
                      const State& u0,
                      const std::function<void(const State&)>& dump_final,
                      std::ostream& log) {
  const SplittingScheme scheme = make_scheme(config.scheme);
  const auto start = std::chrono::steady_clock::now();
  const SolveReport<State> report =
      evolve(problem, scheme, config.T, config.n, u0);
  const auto stop = std::chrono::steady_clock::now();
  const double wall_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();

  const std::string tag = run_tag("solve", config);
  const std::string trajectory = output_file(config, tag + "_trajectory.csv");
  io::write_trajectory_csv(trajectory, report.times, report.norms);
  dump_final(report.final_state);

  const double md = static_cast<double>(config.m);
  const double cost =
      static_cast<double>(report.steps_taken) * md * std::log2(md);
  log << "solve: problem=" << config.problem << " scheme=" << config.scheme
      << " m=" << config.m << " n=" << config.n << " T=" << config.T << '\n';
  log << "  steps taken: " << report.steps_taken << '/' << config.n << '\n';
  log << "  norm: initial " << io::full_precision(report.norms.front())
      << ", final " << io::full_precision(report.norms.back()) << '\n';
  if (report.status == SolveStatus::norm_guard_tripped) {
    log << "  norm guard tripped at step " << report.steps_taken
        << " (norm " << io::full_precision(report.norms.back())
        << "); run stopped early\n";
  }
  log << "  wall clock: " << wall_ms << " ms; cost model n*m*log2(m) = "
      << cost << '\n';
  log << "  wrote " << trajectory << '\n';
}

void write_study_outputs(const RunConfig& config, const std::string& command,
                         const std::string& context,
                         const oracle::ConvergenceReport& report,
                         const std::string& x_label, std::ostream& log) {
  const std::string tag = run_tag(command, config);
  const std::string csv = output_file(config, tag + ".csv");
  io::write_report_csv(csv, report);

  io::LogLogPlot plot;
  plot.title = command + ": " + config.problem + ", " + config.scheme;
  plot.x_label = x_label;
  plot.y_label = "L2 error";
  for (const auto& row : report.rows) plot.points.emplace_back(row.h, row.err_l2);
  if (report.fit_skipped) {
    plot.annotation = report.notice;
  } else {
    plot.slope = report.slope;
    plot.has_slope = true;
  }
  const std::string svg = output_file(config, tag + ".svg");
  io::write_loglog_svg(svg, plot);

  log << command << ": problem=" << config.problem
      << " scheme=" << config.scheme << ' ' << context << '\n';
  for (const auto& row : report.rows) {
    log << "  res=" << row.res << " h=" << io::full_precision(row.h)
        << " err_l2=" << io::full_precision(row.err_l2)
        << " err_linf=" << io::full_precision(row.err_linf) << '\n';
  }
  if (report.fit_skipped) {
    log << "  " << report.notice << '\n';
  } else {
    log << "  fitted slope " << report.slope << " (r2 " << report.r2;
    if (report.dropped_points > 0) {
      log << ", " << report.dropped_points << " pre-asymptotic points dropped";
    }
    log << ")\n";
  }
  if (report.reference_gap > 0.0) {
    log << "  reference Richardson gap "
        << io::full_precision(report.reference_gap) << '\n';
  }
  log << "  wrote " << csv << " and " << svg << '\n';
}

}  // namespace

void cmd_solve(const RunConfig& config, std::ostream& log) {
  validate_for_solve(config);
  const std::string tag = run_tag("solve", config);

  if (config.problem == "wave") {
    const problems::WaveInteractionState u0 =
        problems::make_wave_initial_data(kWaveXMin, kWaveXMax, config.m);
    const problems::WaveProblem problem(config.nu);
    solve_and_report<problems::WaveProblem, problems::WaveInteractionState>(
        config, problem, u0,
        [&](const problems::WaveInteractionState& final_state) {
          write_wave_component_csv(output_file(config, tag + "_state_u1.csv"),
                                   final_state, final_state.u1);
          write_wave_component_csv(output_file(config, tag + "_state_u2.csv"),
                                   final_state, final_state.u2);
        },
        log);
    return;
  }

  const TorusGrid grid(config.m);
  const problems::InitialData data =
      problems::make_rough_initial_data(config.alpha, grid);
  const auto dump_final = [&](const TorusField& final_state) {
    io::write_field_csv(output_file(config, tag + "_state.csv"), final_state);
  };

  if (config.problem == "sp") {
    const problems::SchrodingerPoissonProblem problem(grid, data.source);
    problem.validate_neutrality(data.u0);
    solve_and_report<problems::SchrodingerPoissonProblem, TorusField>(
        config, problem, data.u0, dump_final, log);
    return;
  }
  const problems::NLSProblem problem(grid, cubic_intensity,
                                     build_kernel(config, grid));
  solve_and_report<problems::NLSProblem, TorusField>(config, problem, data.u0,
                                                     dump_final, log);
}

void cmd_converge_time(const RunConfig& config, std::ostream& log) {
  validate_for_converge_time(config);
  const SplittingScheme scheme = make_scheme(config.scheme);

  oracle::ConvergenceReport report;
  if (config.problem == "wave") {
    const problems::WaveInteractionState u0 =
        problems::make_wave_initial_data(kWaveXMin, kWaveXMax, config.m);
    const problems::WaveProblem problem(config.nu);
    report = oracle::converge_time_study(problem, scheme, u0, config.T,
                                         config.n_list, config.ref_n,
                                         wave_diff_norms());
  } else {
    const TorusGrid grid(config.m);
    const problems::InitialData data =
        problems::make_rough_initial_data(config.alpha, grid);
    if (config.problem == "sp") {
      const problems::SchrodingerPoissonProblem problem(grid, data.source);
      problem.validate_neutrality(data.u0);
      report = oracle::converge_time_study(problem, scheme, data.u0, config.T,
                                           config.n_list, config.ref_n,
                                           oracle::torus_diff_norms());
    } else {
      const problems::NLSProblem problem(grid, cubic_intensity,
                                         build_kernel(config, grid));
      report = oracle::converge_time_study(problem, scheme, data.u0, config.T,
                                           config.n_list, config.ref_n,
                                           oracle::torus_diff_norms());
    }
  }
  write_study_outputs(config, "converge-time",
                      "m=" + std::to_string(config.m) + " T=" +
                          io::full_precision(config.T) + " ref_n=" +
                          std::to_string(config.ref_n),
                      report, "h", log);
}

void cmd_converge_space(const RunConfig& config, std::ostream& log) {
  validate_for_converge_space(config);
  const SplittingScheme scheme = make_scheme(config.scheme);

  const auto run_at = [&](std::size_t m) -> TorusField {
    const TorusGrid grid(m);
    const problems::InitialData data =
        problems::make_rough_initial_data(config.alpha, grid);
    if (config.problem == "sp") {
      const problems::SchrodingerPoissonProblem problem(grid, data.source);
      problem.validate_neutrality(data.u0);
      return evolve(problem, scheme, config.T, config.n, data.u0).final_state;
    }
    const problems::NLSProblem problem(grid, cubic_intensity,
                                       build_kernel(config, grid));
    return evolve(problem, scheme, config.T, config.n, data.u0).final_state;
  };

  const oracle::ConvergenceReport report =
      oracle::converge_space_study(run_at, config.m_list, config.ref_m);
  write_study_outputs(config, "converge-space",
                      "n=" + std::to_string(config.n) + " T=" +
                          io::full_precision(config.T) + " ref_m=" +
                          std::to_string(config.ref_m),
                      report, "1/m", log);
}

void cmd_schemes(std::ostream& log) {
  for (const SchemeKind kind :
       {SchemeKind::lie, SchemeKind::strang, SchemeKind::yoshida4}) {
    const SplittingScheme scheme = make_scheme(kind);
    validate_scheme(scheme);
    log << scheme.name << ": " << scheme.stage_count() << " stage"
        << (scheme.stage_count() == 1 ? "" : "s")
        << ", coefficient sums consistent\n";
    for (std::size_t j = 0; j < scheme.stages.size(); ++j) {
      log << "  stage " << (j + 1) << ": a="
          << io::full_precision(scheme.stages[j].a)
          << " b=" << io::full_precision(scheme.stages[j].b) << '\n';
    }
    if (kind == SchemeKind::yoshida4) {
      log << "  empirically certified order 4\n";
    }
  }
}

}  // namespace splitflow::tools
