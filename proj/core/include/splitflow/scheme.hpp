#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace splitflow {

/// One stage of a splitting scheme: the pair (a_j, b_j) weighting the linear
/// and nonlinear sub-flows.  A full step of size h is the composition
///
///   Phi_h = Phi^B(b_m h) o Phi^A(a_m h) o ... o Phi^B(b_1 h) o Phi^A(a_1 h),
///
/// executed stage 1 first, linear sub-flow first within each stage.
struct SchemeStage {
  double a = 0.0;
  double b = 0.0;
};

struct SplittingScheme {
  std::string name;
  std::vector<SchemeStage> stages;

  [[nodiscard]] std::size_t stage_count() const noexcept { return stages.size(); }
};

enum class SchemeKind { lie, strang, yoshida4 };

/// Builds one of the named schemes:
///   lie      — [(1, 1)]
///   strang   — [(1/2, 1), (1/2, 0)]
///   yoshida4 — the triple-jump composition of strang with weights
///              w1 = 1/(2 - 2^(1/3)), w0 = 1 - 2 w1, merged into four stages.
[[nodiscard]] SplittingScheme make_scheme(SchemeKind kind);

/// Name-based lookup ("lie", "strang", "yoshida4").  Throws InvalidSchemeError
/// on an unknown name.
[[nodiscard]] SplittingScheme make_scheme(const std::string& name);

/// Checks the consistency conditions sum a_j = sum b_j = 1 (within 1e-14),
/// finiteness of every coefficient and a nonempty stage list.  Throws
/// InvalidSchemeError on violation.
void validate_scheme(const SplittingScheme& scheme);

/// The sub-flow durations (a_j h, b_j h) of one step of size h, in execution
/// order.  h may be zero (all durations zero).
[[nodiscard]] std::vector<std::pair<double, double>> substeps(
    const SplittingScheme& scheme, double h);

/// The 1-periodic step functions alpha, beta attached to a scheme with m
/// stages:
///
///   alpha = 2 m a_j on [(j-1)/m, (j-1/2)/m),  0 on [(j-1/2)/m, j/m),
///   beta  = 0       on [(j-1)/m, (j-1/2)/m),  2 m b_j on [(j-1/2)/m, j/m),
///
/// so that both integrate to 1 over one period and have disjoint supports.
/// Exposed for analysis and testing; production stepping uses substeps().
class StepFunctions {
 public:
  explicit StepFunctions(SplittingScheme scheme);

  [[nodiscard]] double alpha(double t) const noexcept;
  [[nodiscard]] double beta(double t) const noexcept;

  /// Exact integral of alpha (resp. beta) over [t0, t1], using the piecewise
  /// constant structure; no quadrature error beyond rounding.
  [[nodiscard]] double integrate_alpha(double t0, double t1) const noexcept;
  [[nodiscard]] double integrate_beta(double t0, double t1) const noexcept;

  /// Breakpoints of one period [0, 1]: k/(2m), k = 0..2m.
  [[nodiscard]] std::vector<double> breakpoints() const;

  [[nodiscard]] const SplittingScheme& scheme() const noexcept { return scheme_; }

 private:
  [[nodiscard]] double value(double t, bool want_alpha) const noexcept;
  [[nodiscard]] double integral_from_zero(double t, bool want_alpha) const noexcept;

  SplittingScheme scheme_;
};

/// Convenience factory mirroring the free-function style of the rest of the
/// module.
[[nodiscard]] StepFunctions step_functions(const SplittingScheme& scheme);

}  // namespace splitflow
