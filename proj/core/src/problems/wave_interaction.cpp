#include "splitflow/problems/wave_interaction.hpp"

#include <cmath>
#include <numbers>

#include "splitflow/detail/fft_backend.hpp"
#include "splitflow/errors.hpp"

namespace splitflow::problems {

namespace {

void check_state(const WaveInteractionState& state) {
  if (state.size() < 2 || state.u2.size() != state.size()) {
    throw Error("wave state: u1 and u2 must share at least two nodes");
  }
  if (!(state.x_max > state.x_min)) {
    throw Error("wave state: x_max must exceed x_min");
  }
}

long signed_freq(std::size_t p, std::size_t n) {
  return (p < (n + 1) / 2) ? static_cast<long>(p)
                           : static_cast<long>(p) - static_cast<long>(n);
}

/// Translates samples by shift (u(x) <- u(x + shift)) via the spectral
/// phase factor exp(i 2 pi k shift / L) on each mode k.
std::vector<wcplx> translate(const std::vector<wcplx>& u, double shift,
                             double length) {
  const std::size_t n = u.size();
  std::vector<wcplx> hat(n);
  splitflow::detail::fft_forward_raw(u, hat);
  const double base = 2.0 * std::numbers::pi * shift / length;
  for (std::size_t p = 0; p < n; ++p) {
    const double phase = base * static_cast<double>(signed_freq(p, n));
    hat[p] *= wcplx(std::cos(phase), std::sin(phase));
  }
  std::vector<wcplx> out(n);
  splitflow::detail::fft_backward_raw(hat, out);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (auto& v : out) v *= inv_n;
  return out;
}

struct Pair {
  std::vector<wcplx> w1;
  std::vector<wcplx> w2;
};

/// Right-hand side of the interaction system; recomputes g from the
/// current stage values.
Pair rhs(const WaveInteractionState& shape, const Pair& w, double nu) {
  WaveInteractionState tmp{shape.x_min, shape.x_max, w.w1, w.w2};
  const std::vector<wcplx> g = wave_g(tmp);
  const std::size_t n = w.w1.size();
  Pair out{std::vector<wcplx>(n), std::vector<wcplx>(n)};
  for (std::size_t q = 0; q < n; ++q) {
    out.w1[q] = -nu * g[q] * w.w2[q];
    out.w2[q] = nu * std::conj(g[q]) * w.w1[q];
  }
  return out;
}

Pair axpy(const Pair& w, double c, const Pair& k) {
  const std::size_t n = w.w1.size();
  Pair out{std::vector<wcplx>(n), std::vector<wcplx>(n)};
  for (std::size_t q = 0; q < n; ++q) {
    out.w1[q] = w.w1[q] + c * k.w1[q];
    out.w2[q] = w.w2[q] + c * k.w2[q];
  }
  return out;
}

}  // namespace

double wave_l2_norm(const WaveInteractionState& state) {
  double acc = 0.0;
  for (std::size_t q = 0; q < state.size(); ++q) {
    acc += std::norm(state.u1[q]) + std::norm(state.u2[q]);
  }
  return std::sqrt(acc * state.dx());
}

WaveInteractionState wave_linear_flow(const WaveInteractionState& state,
                                      double t) {
  check_state(state);
  WaveInteractionState out = state;
  out.u1 = translate(state.u1, t, state.length());
  out.u2 = translate(state.u2, -t, state.length());
  return out;
}

std::vector<wcplx> wave_g(const WaveInteractionState& state) {
  check_state(state);
  const std::size_t n = state.size();
  const double dx = state.dx();
  std::vector<wcplx> g(n);
  g[0] = wcplx(0.0, 0.0);
  wcplx prev = std::conj(state.u2[0]) * state.u1[0];
  for (std::size_t q = 1; q < n; ++q) {
    const wcplx cur = std::conj(state.u2[q]) * state.u1[q];
    g[q] = g[q - 1] + 0.5 * dx * (prev + cur);
    prev = cur;
  }
  return g;
}

WaveInteractionState wave_nonlinear_flow(const WaveInteractionState& state,
                                         double t, double nu,
                                         std::size_t substeps) {
  check_state(state);
  if (substeps < 1) {
    throw Error("wave_nonlinear_flow: substeps must be at least 1");
  }
  const double dt = t / static_cast<double>(substeps);
  Pair w{state.u1, state.u2};
  for (std::size_t s = 0; s < substeps; ++s) {
    const Pair k1 = rhs(state, w, nu);
    const Pair k2 = rhs(state, axpy(w, 0.5 * dt, k1), nu);
    const Pair k3 = rhs(state, axpy(w, 0.5 * dt, k2), nu);
    const Pair k4 = rhs(state, axpy(w, dt, k3), nu);
    const std::size_t n = w.w1.size();
    for (std::size_t q = 0; q < n; ++q) {
      w.w1[q] += (dt / 6.0) *
                 (k1.w1[q] + 2.0 * k2.w1[q] + 2.0 * k3.w1[q] + k4.w1[q]);
      w.w2[q] += (dt / 6.0) *
                 (k1.w2[q] + 2.0 * k2.w2[q] + 2.0 * k3.w2[q] + k4.w2[q]);
    }
  }
  WaveInteractionState out = state;
  out.u1 = std::move(w.w1);
  out.u2 = std::move(w.w2);
  return out;
}

double compact_bump(double x, double center, double half_width) {
  const double r = (x - center) / half_width;
  const double r2 = r * r;
  if (r2 >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - r2));
}

WaveInteractionState make_wave_initial_data(double x_min, double x_max,
                                            std::size_t n_nodes) {
  WaveInteractionState state;
  state.x_min = x_min;
  state.x_max = x_max;
  state.u1.resize(n_nodes);
  state.u2.resize(n_nodes);
  const double length = x_max - x_min;
  const double mid = 0.5 * (x_min + x_max);
  const double half_width = length / 8.0;
  const double c1 = mid - 0.25 * length / 2.0;
  const double c2 = mid + 0.25 * length / 2.0;
  for (std::size_t q = 0; q < n_nodes; ++q) {
    const double x = state.node(q);
    const double b1 = compact_bump(x, c1, half_width);
    const double b2 = compact_bump(x, c2, half_width);
    state.u1[q] = wcplx(b1, 0.0);
    const double phase = 2.0 * std::numbers::pi * (x - mid) / length;
    state.u2[q] = b2 * wcplx(std::cos(phase), std::sin(phase));
  }
  return state;
}

double mass_fraction_outside(const WaveInteractionState& state, double a,
                             double b) {
  double outside = 0.0;
  double total = 0.0;
  for (std::size_t q = 0; q < state.size(); ++q) {
    const double density = std::norm(state.u1[q]) + std::norm(state.u2[q]);
    total += density;
    const double x = state.node(q);
    if (x <= a || x >= b) outside += density;
  }
  if (total == 0.0) return 0.0;
  return outside / total;
}

}  // namespace splitflow::problems
