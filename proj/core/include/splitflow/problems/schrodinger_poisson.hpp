#pragma once

#include <cstddef>
#include <vector>

#include "splitflow/spectral.hpp"
#include "splitflow/torus.hpp"

namespace splitflow::problems {

/// gamma(alpha) = Gamma(alpha + 2) / (sqrt(pi) Gamma(alpha + 5/2)),
/// the value of int_0^1 sin^(3 + 2 alpha)(pi x) dx.
[[nodiscard]] double gamma_alpha(double alpha);

struct InitialData {
  TorusField u0;               // node representation
  std::vector<double> source;  // background density D at the nodes
};

/// The rough-datum pair used throughout the experiments:
///
///   u0(x) = sin^(3/2 + alpha)(pi x),  evaluated as
///           exp((3/2 + alpha) log sin(pi x)) with an explicit 0 at x = 0,
///   D(x)  = gamma(alpha) (1 + (1 + 16 pi^2) cos(4 pi x)),
///
/// which satisfies the discrete neutrality D_hat_0 ~ ||u0||^2 up to the
/// quadrature gap of the grid (below 1e-8 for m = 4097).
[[nodiscard]] InitialData make_rough_initial_data(double alpha,
                                                  const TorusGrid& grid);

/// Exact nonlinear sub-flow of the Schroedinger--Poisson system
///
///   i u_t + u_xx + |u|^2 u + V u = 0,  V_xx = D - |u|^2:
///
/// with the linear part frozen, |u| is constant in time, so
/// u(t) = exp(i t (V + |u|^2)) u(0) with V = poisson_potential(D - |u|^2).
/// The phase uses the real part of V; the imaginary part is rounding noise.
[[nodiscard]] TorusField sp_nonlinear_flow(const TorusField& u, double t,
                                           const std::vector<double>& source,
                                           double neutrality_tol);

/// Splitting problem for the Schroedinger--Poisson system.  Immutable after
/// construction; flows are pure.  norm is the discrete L2 norm.
class SchrodingerPoissonProblem {
 public:
  SchrodingerPoissonProblem(TorusGrid grid, std::vector<double> source,
                            double neutrality_tol = 1e-5);

  /// Checks the binding condition |D_hat_0 - ||u0||^2| <= neutrality_tol.
  /// Throws NeutralityError with the residual on violation.
  void validate_neutrality(const TorusField& u0) const;

  [[nodiscard]] TorusField linear_flow(double t, const TorusField& u) const {
    return splitflow::linear_flow(u, t);
  }

  [[nodiscard]] TorusField nonlinear_flow(double t, const TorusField& u) const {
    return sp_nonlinear_flow(u, t, source_, neutrality_tol_);
  }

  [[nodiscard]] double norm(const TorusField& u) const { return l2_norm(u); }

  [[nodiscard]] const TorusGrid& grid() const noexcept { return grid_; }
  [[nodiscard]] const std::vector<double>& source() const noexcept {
    return source_;
  }
  [[nodiscard]] double neutrality_tol() const noexcept { return neutrality_tol_; }

 private:
  TorusGrid grid_;
  std::vector<double> source_;
  double neutrality_tol_;
};

}  // namespace splitflow::problems
