#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace splitflow::problems {

using wcplx = std::complex<double>;

/// Two-component field (u1, u2) on N equispaced nodes of the periodized
/// interval [x_min, x_max): x_q = x_min + q (x_max - x_min) / N.
struct WaveInteractionState {
  double x_min = 0.0;
  double x_max = 1.0;
  std::vector<wcplx> u1;
  std::vector<wcplx> u2;

  [[nodiscard]] std::size_t size() const noexcept { return u1.size(); }
  [[nodiscard]] double length() const noexcept { return x_max - x_min; }
  [[nodiscard]] double dx() const noexcept {
    return length() / static_cast<double>(size());
  }
  [[nodiscard]] double node(std::size_t q) const noexcept {
    return x_min + static_cast<double>(q) * dx();
  }
};

/// Discrete L2 norm of the pair: sqrt(sum_q (|u1_q|^2 + |u2_q|^2) dx).
[[nodiscard]] double wave_l2_norm(const WaveInteractionState& state);

/// Exact flow of the transport part w_t + i A w = 0 with A = i d_x sigma_z:
/// u1 is carried left (u1(x) <- u1(x + t)) and u2 right (u2(x) <- u2(x - t)),
/// realized as spectral phase shifts exp(+-i 2 pi k t / L) on the
/// periodized interval.
[[nodiscard]] WaveInteractionState wave_linear_flow(
    const WaveInteractionState& state, double t);

/// Interaction primitive g(x) = int_{x_min}^{x} conj(u2) u1 dy, computed by
/// the cumulative trapezoid rule; g(x_min) = 0.
[[nodiscard]] std::vector<wcplx> wave_g(const WaveInteractionState& state);

/// Nonlinear sub-flow of the resonant interaction system
///
///   d_t w1 = -nu g(w) w2,   d_t w2 = +nu conj(g(w)) w1,
///
/// integrated with classical RK4, recomputing g at every stage.  The
/// coupling matrix is anti-Hermitian, so the pointwise density
/// |w1|^2 + |w2|^2 is conserved by the exact flow.
[[nodiscard]] WaveInteractionState wave_nonlinear_flow(
    const WaveInteractionState& state, double t, double nu,
    std::size_t substeps = 4);

/// Splitting problem wrapper with the interaction strength nu and the RK4
/// substep count for the nonlinear flow.
class WaveProblem {
 public:
  explicit WaveProblem(double nu, std::size_t substeps = 4)
      : nu_(nu), substeps_(substeps) {}

  [[nodiscard]] WaveInteractionState linear_flow(
      double t, const WaveInteractionState& state) const {
    return wave_linear_flow(state, t);
  }

  [[nodiscard]] WaveInteractionState nonlinear_flow(
      double t, const WaveInteractionState& state) const {
    return wave_nonlinear_flow(state, t, nu_, substeps_);
  }

  [[nodiscard]] double norm(const WaveInteractionState& state) const {
    return wave_l2_norm(state);
  }

  [[nodiscard]] double nu() const noexcept { return nu_; }
  [[nodiscard]] std::size_t substeps() const noexcept { return substeps_; }

 private:
  double nu_;
  std::size_t substeps_;
};

/// Smooth compactly supported bump: exp(1 - 1/(1 - r^2)) for |r| < 1, else 0,
/// with r = (x - center) / half_width; peak value 1 at the center.
[[nodiscard]] double compact_bump(double x, double center, double half_width);

/// Default interaction datum on [x_min, x_max): two overlapping bump
/// envelopes, u1 centered at -1/4 and u2 at +1/4 of the interval length
/// around the midpoint, both with half-width length/8 and unit amplitude;
/// u2 carries a unit-frequency chirp so the interaction integral is not
/// artificially real.
[[nodiscard]] WaveInteractionState make_wave_initial_data(double x_min,
                                                          double x_max,
                                                          std::size_t n_nodes);

/// Mass share of the pair outside the open interval (a, b):
/// sum over nodes x_q <= a or x_q >= b of (|u1|^2 + |u2|^2) dx, divided by
/// the total.  Used to check support containment under transport.
[[nodiscard]] double mass_fraction_outside(const WaveInteractionState& state,
                                           double a, double b);

}  // namespace splitflow::problems
