#include "splitflow/oracle/galerkin.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "splitflow/errors.hpp"

namespace splitflow::oracle {

namespace {

std::vector<cplx> rk4_run(const GalerkinSystem& system, std::vector<cplx> c,
                          double T, std::size_t steps) {
  const double dt = T / static_cast<double>(steps);
  const std::size_t m = c.size();
  for (std::size_t k = 0; k < steps; ++k) {
    const std::vector<cplx> k1 = system.rhs(c);
    std::vector<cplx> stage(m);
    for (std::size_t p = 0; p < m; ++p) stage[p] = c[p] + 0.5 * dt * k1[p];
    const std::vector<cplx> k2 = system.rhs(stage);
    for (std::size_t p = 0; p < m; ++p) stage[p] = c[p] + 0.5 * dt * k2[p];
    const std::vector<cplx> k3 = system.rhs(stage);
    for (std::size_t p = 0; p < m; ++p) stage[p] = c[p] + dt * k3[p];
    const std::vector<cplx> k4 = system.rhs(stage);
    for (std::size_t p = 0; p < m; ++p) {
      c[p] += (dt / 6.0) * (k1[p] + 2.0 * k2[p] + 2.0 * k3[p] + k4[p]);
    }
  }
  return c;
}

}  // namespace

GalerkinSystem::GalerkinSystem(TorusGrid grid, std::vector<double> source)
    : grid_(grid), source_(std::move(source)) {
  if (source_.size() != grid_.size()) {
    throw Error("GalerkinSystem: source size does not match grid");
  }
  std::vector<cplx> src(grid_.size());
  for (std::size_t q = 0; q < grid_.size(); ++q) src[q] = cplx(source_[q], 0.0);
  source_hat_ = naive_forward(src);
  lambda_.resize(grid_.size());
  for (std::size_t p = 0; p < grid_.size(); ++p) {
    const double k = 2.0 * std::numbers::pi *
                     static_cast<double>(grid_.signed_freq(p));
    lambda_[p] = k * k;
  }
}

std::vector<cplx> GalerkinSystem::naive_forward(
    const std::vector<cplx>& nodes) const {
  const std::size_t m = nodes.size();
  std::vector<cplx> hat(m);
  for (std::size_t p = 0; p < m; ++p) {
    cplx acc(0.0, 0.0);
    for (std::size_t q = 0; q < m; ++q) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(p) *
                           static_cast<double>(q) / static_cast<double>(m);
      acc += nodes[q] * cplx(std::cos(angle), std::sin(angle));
    }
    hat[p] = acc / static_cast<double>(m);
  }
  return hat;
}

std::vector<cplx> GalerkinSystem::naive_inverse(
    const std::vector<cplx>& coeffs) const {
  const std::size_t m = coeffs.size();
  std::vector<cplx> nodes(m);
  for (std::size_t q = 0; q < m; ++q) {
    cplx acc(0.0, 0.0);
    for (std::size_t p = 0; p < m; ++p) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(p) *
                           static_cast<double>(q) / static_cast<double>(m);
      acc += coeffs[p] * cplx(std::cos(angle), std::sin(angle));
    }
    nodes[q] = acc;
  }
  return nodes;
}

std::vector<cplx> GalerkinSystem::rhs(const std::vector<cplx>& coeffs) const {
  const std::size_t m = grid_.size();
  const std::vector<cplx> u = naive_inverse(coeffs);

  std::vector<cplx> intensity(m);
  for (std::size_t q = 0; q < m; ++q) intensity[q] = cplx(std::norm(u[q]), 0.0);
  const std::vector<cplx> intensity_hat = naive_forward(intensity);

  // Neutral Poisson solve: V_hat_p = -(D - |u|^2)_hat_p / (2 pi p)^2, mean 0.
  std::vector<cplx> v_hat(m, cplx(0.0, 0.0));
  for (std::size_t p = 1; p < m; ++p) {
    v_hat[p] = -(source_hat_[p] - intensity_hat[p]) / lambda_[p];
  }
  const std::vector<cplx> v = naive_inverse(v_hat);

  std::vector<cplx> coupling(m);
  for (std::size_t q = 0; q < m; ++q) {
    coupling[q] = (intensity[q].real() + v[q].real()) * u[q];
  }
  const std::vector<cplx> coupling_hat = naive_forward(coupling);

  std::vector<cplx> out(m);
  const cplx i_unit(0.0, 1.0);
  for (std::size_t p = 0; p < m; ++p) {
    out[p] = -i_unit * lambda_[p] * coeffs[p] + i_unit * coupling_hat[p];
  }
  return out;
}

TorusField galerkin_oracle(const GalerkinSystem& system, const TorusField& u0,
                           double T, std::size_t rk4_steps,
                           double doubling_tol) {
  if (rk4_steps < 1) throw Error("galerkin_oracle: rk4_steps must be >= 1");
  if (!(system.grid() == u0.grid())) {
    throw Error("galerkin_oracle: datum grid does not match system grid");
  }

  std::vector<cplx> c0;
  if (u0.repr() == FieldRepr::coefficients) {
    c0 = u0.data();
  } else {
    c0 = system.naive_forward(u0.data());
  }

  if (T == 0.0) {
    return TorusField(system.grid(), FieldRepr::nodes,
                      system.naive_inverse(c0));
  }

  const std::vector<cplx> coarse = rk4_run(system, c0, T, rk4_steps);
  const std::vector<cplx> fine = rk4_run(system, c0, T, 2 * rk4_steps);

  double gap2 = 0.0;
  for (std::size_t p = 0; p < fine.size(); ++p) gap2 += std::norm(fine[p] - coarse[p]);
  const double gap = std::sqrt(gap2);
  if (!(gap <= doubling_tol)) {
    throw OracleNotConvergedError(
        "galerkin_oracle: step-doubling gap " + std::to_string(gap) +
        " exceeds tolerance; increase rk4_steps");
  }

  return TorusField(system.grid(), FieldRepr::nodes, system.naive_inverse(fine));
}

}  // namespace splitflow::oracle
