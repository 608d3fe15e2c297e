#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "splitflow/detail/parallel.hpp"
#include "splitflow/errors.hpp"
#include "splitflow/evolution.hpp"
#include "splitflow/oracle/convergence.hpp"
#include "splitflow/scheme.hpp"
#include "splitflow/spectral.hpp"
#include "splitflow/torus.hpp"

namespace splitflow::oracle {

/// Distance functionals in the two reported norms for a given state type.
template <class State>
struct DiffNorms {
  std::function<double(const State&, const State&)> l2;
  std::function<double(const State&, const State&)> linf;
};

[[nodiscard]] DiffNorms<TorusField> torus_diff_norms();

template <class State>
struct ReferenceResult {
  State state;
  double richardson_gap = 0.0;  // ||ref(n_ref) - ref(n_ref/2)||
};

/// High-resolution strang run used as the stand-in for the exact solution,
/// with the matching half-resolution run retained as a Richardson
/// self-consistency measurement.  The gap must be checked against the
/// smallest error the caller intends to measure (see
/// require_reference_converged); computing it here keeps references online
/// and never stored.
template <class P, class State>
  requires EvolutionProblem<P, State>
[[nodiscard]] ReferenceResult<State> reference_solve(
    const P& problem, const State& u0, double T, std::size_t n_ref,
    const std::function<double(const State&, const State&)>& l2_distance) {
  if (n_ref < 2 || n_ref % 2 != 0) {
    throw Error("reference_solve: n_ref must be even and >= 2");
  }
  const SplittingScheme strang = make_scheme(SchemeKind::strang);
  State full = evolve(problem, strang, T, n_ref, u0).final_state;
  State half = evolve(problem, strang, T, n_ref / 2, u0).final_state;
  ReferenceResult<State> out{std::move(full), 0.0};
  out.richardson_gap = l2_distance(out.state, half);
  return out;
}

/// Enforces the Richardson criterion: the reference gap must stay below a
/// tenth of the smallest measured error, else ReferenceNotConvergedError.
void require_reference_converged(double richardson_gap, double smallest_error);

/// Time-convergence sweep at fixed grid: for each n the scheme runs to time
/// T and the final state is compared against the strang reference with
/// ref_n steps.  n_list must be ascending with ref_n >= 8 x its maximum.
/// Rows run in a work pool; the report is finalized with the floor/fit
/// rules of finalize_report and the Richardson criterion is enforced
/// against the smallest error above the floor.
template <class P, class State>
  requires EvolutionProblem<P, State>
[[nodiscard]] ConvergenceReport converge_time_study(
    const P& problem, const SplittingScheme& scheme, const State& u0, double T,
    const std::vector<std::size_t>& n_list, std::size_t ref_n,
    const DiffNorms<State>& norms, double error_floor = 1e-12) {
  if (n_list.size() < 1) throw Error("converge_time_study: empty n_list");
  for (std::size_t i = 0; i + 1 < n_list.size(); ++i) {
    if (n_list[i] >= n_list[i + 1]) {
      throw Error("converge_time_study: n_list must be strictly ascending");
    }
  }
  if (ref_n < 8 * n_list.back()) {
    throw Error("converge_time_study: ref_n must be at least 8x max(n_list)");
  }

  const ReferenceResult<State> ref =
      reference_solve(problem, u0, T, ref_n, norms.l2);

  ConvergenceReport report;
  report.rows.resize(n_list.size());
  report.reference_gap = ref.richardson_gap;
  detail::parallel_for(n_list.size(), [&](std::size_t i) {
    const std::size_t n = n_list[i];
    const State final_state =
        evolve(problem, scheme, T, n, u0).final_state;
    ConvergenceRow row;
    row.res = static_cast<double>(n);
    row.h = T / static_cast<double>(n);
    row.err_l2 = norms.l2(final_state, ref.state);
    row.err_linf = norms.linf(final_state, ref.state);
    report.rows[i] = row;
  });

  finalize_report(report, error_floor);

  double smallest = 0.0;
  for (const auto& row : report.rows) {
    if (row.err_l2 > error_floor && (smallest == 0.0 || row.err_l2 < smallest)) {
      smallest = row.err_l2;
    }
  }
  require_reference_converged(ref.richardson_gap,
                              smallest > 0.0 ? smallest : error_floor);
  return report;
}

/// Per-step (local) error probe: err(h) = dist(exact_flow(h, u0),
/// step(problem, scheme, h, u0)) for each h in h_list.  exact_flow is the
/// caller's oracle — galerkin_oracle on a small system, or a reference
/// solve.  The datum should lie in the smooth class so the theorem's h^2
/// regime is visible.
template <class P, class State>
  requires EvolutionProblem<P, State>
[[nodiscard]] ConvergenceReport local_error_probe(
    const P& problem, const SplittingScheme& scheme, const State& u0,
    std::vector<double> h_list,
    const std::function<State(double, const State&)>& exact_flow,
    const DiffNorms<State>& norms, double error_floor = 1e-14) {
  validate_scheme(scheme);
  if (h_list.size() < 1) throw Error("local_error_probe: empty h_list");
  std::sort(h_list.begin(), h_list.end(), std::greater<double>());

  ConvergenceReport report;
  report.rows.resize(h_list.size());
  detail::parallel_for(h_list.size(), [&](std::size_t i) {
    const double h = h_list[i];
    if (!(h > 0.0)) throw Error("local_error_probe: h must be positive");
    const State exact = exact_flow(h, u0);
    const State stepped = step(problem, scheme, h, u0);
    ConvergenceRow row;
    row.res = 1.0 / h;
    row.h = h;
    row.err_l2 = norms.l2(stepped, exact);
    row.err_linf = norms.linf(stepped, exact);
    report.rows[i] = row;
  });

  finalize_report(report, error_floor);
  return report;
}

/// Space-convergence sweep at fixed time stepping.  run_at(m) must produce
/// the final-time field of the full solver at grid size m (the caller
/// closes over scheme, T, n and the datum family).  Each coarse result is
/// injected into the reference grid by trigonometric interpolation and
/// compared there.  m_list must be ascending odd with ref_m >= 4 x its
/// maximum.
[[nodiscard]] ConvergenceReport converge_space_study(
    const std::function<TorusField(std::size_t)>& run_at,
    const std::vector<std::size_t>& m_list, std::size_t ref_m,
    double error_floor = 1e-12);

}  // namespace splitflow::oracle
