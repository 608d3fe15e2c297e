#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitflow/errors.hpp"
#include "splitflow/scheme.hpp"

namespace splitflow {

/// A problem suitable for operator splitting: exact (or exactly computable)
/// flows of the linear part A and nonlinear part B of u_t + iAu + iB(u) = 0,
/// plus the norm used for reporting and the runaway guard.  Flows must be
/// pure: they return a new state and leave the input untouched.
template <class P, class State>
concept EvolutionProblem = requires(const P& p, double t, const State& u) {
  { p.linear_flow(t, u) } -> std::convertible_to<State>;
  { p.nonlinear_flow(t, u) } -> std::convertible_to<State>;
  { p.norm(u) } -> std::convertible_to<double>;
};

/// Ad-hoc problem assembled from callables; used by tests and controls
/// (e.g. a B == 0 problem, or a problem reporting a different norm).
template <class State>
struct FlowPair {
  std::function<State(double, const State&)> linear;
  std::function<State(double, const State&)> nonlinear;
  std::function<double(const State&)> norm_fn;

  State linear_flow(double t, const State& u) const { return linear(t, u); }
  State nonlinear_flow(double t, const State& u) const { return nonlinear(t, u); }
  double norm(const State& u) const { return norm_fn(u); }
};

enum class SolveStatus { completed, norm_guard_tripped };

template <class State>
struct SolveReport {
  std::vector<double> times;  // t_0 = 0, then the time after each recorded step
  std::vector<double> norms;  // problem norm at the matching time
  SolveStatus status = SolveStatus::completed;
  std::size_t steps_taken = 0;
  State final_state;
};

/// One composed step of size h >= 0.  Zero-length sub-flows are skipped
/// exactly, so h == 0 returns the input unchanged and strang's trailing
/// b = 0 stage costs nothing.
template <class P, class State>
  requires EvolutionProblem<P, State>
[[nodiscard]] State step(const P& problem, const SplittingScheme& scheme,
                         double h, State u) {
  for (const auto& [ta, tb] : substeps(scheme, h)) {
    if (ta != 0.0) u = problem.linear_flow(ta, u);
    if (tb != 0.0) u = problem.nonlinear_flow(tb, u);
  }
  return u;
}

/// Fixed-step evolution over [0, T] with n steps of size h = T/n.
///
/// Records the time and norm after every step.  If the norm exceeds
/// norm_guard (default 1e3 x initial norm) the run stops early with status
/// norm_guard_tripped and the offending state as final_state — the discrete
/// stand-in for finite-time blow-up.  A non-finite norm raises
/// NonFiniteStateError carrying the step index.
template <class P, class State>
  requires EvolutionProblem<P, State>
[[nodiscard]] SolveReport<State> evolve(const P& problem,
                                        const SplittingScheme& scheme, double T,
                                        std::size_t n, State u0,
                                        std::optional<double> norm_guard = {}) {
  if (!(T > 0.0)) throw Error("evolve: T must be positive");
  if (n < 1) throw Error("evolve: n must be at least 1");
  validate_scheme(scheme);

  const double n0 = problem.norm(u0);
  if (!std::isfinite(n0)) {
    throw NonFiniteStateError("evolve: initial state has non-finite norm", 0);
  }
  const double guard = norm_guard.value_or(1e3 * n0);
  if (!(guard > n0)) {
    throw Error("evolve: norm guard must exceed the initial norm");
  }

  const double h = T / static_cast<double>(n);
  SolveReport<State> report;
  report.times.reserve(n + 1);
  report.norms.reserve(n + 1);
  report.times.push_back(0.0);
  report.norms.push_back(n0);

  State u = std::move(u0);
  for (std::size_t k = 1; k <= n; ++k) {
    u = step(problem, scheme, h, std::move(u));
    const double nk = problem.norm(u);
    if (!std::isfinite(nk)) {
      throw NonFiniteStateError(
          "evolve: non-finite state at step " + std::to_string(k), k);
    }
    report.times.push_back(static_cast<double>(k) * h);
    report.norms.push_back(nk);
    report.steps_taken = k;
    if (nk > guard) {
      report.status = SolveStatus::norm_guard_tripped;
      report.final_state = std::move(u);
      return report;
    }
  }
  report.status = SolveStatus::completed;
  report.final_state = std::move(u);
  return report;
}

}  // namespace splitflow
