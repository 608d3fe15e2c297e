#pragma once

#include <cstddef>
#include <vector>

#include "splitflow/torus.hpp"

namespace splitflow::oracle {

/// Truncated Fourier system for i u_t + u_xx + |u|^2 u + V u = 0 with
/// V from the neutral Poisson solve, on a small odd mode count (default 5).
///
/// This is the independent measurement instrument: right-hand side
/// evaluation uses its own naive O(m^2) transforms, its own eigenvalues and
/// its own Poisson inversion — no code shared with the splitting flows.
class GalerkinSystem {
 public:
  GalerkinSystem(TorusGrid grid, std::vector<double> source);

  /// d/dt of the coefficient vector:
  /// c_p' = -i lambda_p c_p + i ((|u|^2 + V) u)_hat_p.
  [[nodiscard]] std::vector<cplx> rhs(const std::vector<cplx>& coeffs) const;

  [[nodiscard]] const TorusGrid& grid() const noexcept { return grid_; }

  /// Naive transforms matching the library normalization, exposed so the
  /// oracle path stays self-contained end to end.
  [[nodiscard]] std::vector<cplx> naive_forward(const std::vector<cplx>& nodes) const;
  [[nodiscard]] std::vector<cplx> naive_inverse(const std::vector<cplx>& coeffs) const;

 private:
  TorusGrid grid_;
  std::vector<double> source_;
  std::vector<cplx> source_hat_;
  std::vector<double> lambda_;
};

/// RK4 integration of the full coupled (non-split) system over [0, T] with
/// rk4_steps steps, self-verified by step doubling: the result with
/// 2 x rk4_steps must agree within doubling_tol in L2, else
/// OracleNotConvergedError.  Returns the doubled-resolution result as a
/// node-representation field.
[[nodiscard]] TorusField galerkin_oracle(const GalerkinSystem& system,
                                         const TorusField& u0, double T,
                                         std::size_t rk4_steps,
                                         double doubling_tol = 1e-10);

}  // namespace splitflow::oracle
