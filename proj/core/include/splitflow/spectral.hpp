#pragma once

#include <cstddef>

#include "splitflow/torus.hpp"

namespace splitflow {

/// Eigenvalue of the discrete Laplacian -d_xx seen by frequency index
/// p in 0..m-1 on the m-point torus grid:
///
///   lambda_p = 4 m^2 pi^2 h(p/m),  h(nu) = nu^2 - 2 (nu - 1/2)_+,
///
/// the aliased fold of 4 pi^2 p^2 onto the resolved band; equivalently
/// 4 pi^2 signed_freq(p)^2.
[[nodiscard]] double aliased_eigenvalue(std::size_t p, std::size_t m);

/// Exact flow of u_t = -i A u with A = -d_xx: multiplies coefficient p by
/// exp(-i lambda_p t).  Accepts either representation and preserves it.
[[nodiscard]] TorusField linear_flow(const TorusField& u, double t);

/// Solves the 1-periodic Poisson problem V_xx = rho for the zero-mean
/// potential:
///
///   V_hat_p = -rho_hat_p / (2 pi signed_freq(p))^2  (p != 0),  V_hat_0 = 0.
///
/// rho must be neutral: |rho_hat_0| <= neutrality_tol, else NeutralityError
/// carrying |rho_hat_0|.  Representation of the input is preserved.
[[nodiscard]] TorusField poisson_potential(const TorusField& rho,
                                           double neutrality_tol);

/// Spectral cutoff: zeroes every coefficient with lambda_p > R (thresholds
/// on the eigenvalue, not the frequency).  R >= max lambda_p is the
/// identity; 0 <= R < 4 pi^2 keeps only the mean mode.  Idempotent,
/// self-adjoint, representation preserving.
[[nodiscard]] TorusField project_spectrum(const TorusField& u, double R);

/// Discrete Sobolev norm (sum_p (1 + lambda_p)^theta |u_hat_p|^2)^(1/2),
/// theta in [0, 1]; theta = 0 recovers the L2 norm.
[[nodiscard]] double sobolev_norm(const TorusField& u, double theta);

/// Graph-norm surrogate for the smooth space of the linear operator:
/// (sum_p (1 + lambda_p^2) |u_hat_p|^2)^(1/2).  This is the norm appearing
/// on the right of the projection error bound
/// ||u - project_spectrum(u, R)|| <= R^-1 ||u||_H1.
[[nodiscard]] double h1_graph_norm(const TorusField& u);

/// Trigonometric interpolation onto a finer odd grid: embeds the signed
/// spectrum -l..l into the fine grid's coefficient array and returns the
/// field in the representation of the input.  fine.size() >= u.grid().size().
[[nodiscard]] TorusField trig_interpolate(const TorusField& u,
                                          const TorusGrid& fine);

}  // namespace splitflow
