#pragma once

#include <functional>
#include <vector>

#include "splitflow/spectral.hpp"
#include "splitflow/torus.hpp"

namespace splitflow::problems {

/// Coefficients of the zero-mean periodic Green kernel:
/// G_hat_p = (2 pi signed_freq(p))^-2 for p != 0, G_hat_0 = 0.
[[nodiscard]] std::vector<cplx> green_kernel_coefficients(const TorusGrid& grid);

/// Convolution term (W * |u|^2) at the nodes, computed spectrally as
/// W_hat_p (|u|^2)_hat_p.  kernel_hat holds the m kernel coefficients.
/// For a real symmetric kernel the output is real up to rounding; the
/// imaginary part is discarded.
[[nodiscard]] std::vector<double> hartree_term(
    const TorusField& u, const std::vector<cplx>& kernel_hat);

/// Exact nonlinear sub-flow of
///
///   i u_t + u_xx + f(|u|^2) u + (W * |u|^2) u = 0:
///
/// with the linear part frozen the intensity |u|^2 is invariant, so the flow
/// is the phase rotation u(t) = exp(i t (f(|u|^2) + W * |u|^2)) u(0).
/// f must be real-valued on the intensity range; non-finite values raise.
/// An empty kernel_hat drops the convolution term.
[[nodiscard]] TorusField nls_nonlinear_flow(const TorusField& u, double t,
                                            const std::function<double(double)>& f,
                                            const std::vector<cplx>& kernel_hat);

/// Splitting problem for the nonlinear Schroedinger family.  f is a
/// real-valued function of the intensity s = |u|^2 (e.g. f(s) = s for the
/// focusing cubic equation); kernel_hat optionally adds a Hartree term.
class NLSProblem {
 public:
  NLSProblem(TorusGrid grid, std::function<double(double)> f,
             std::vector<cplx> kernel_hat = {});

  [[nodiscard]] TorusField linear_flow(double t, const TorusField& u) const {
    return splitflow::linear_flow(u, t);
  }

  [[nodiscard]] TorusField nonlinear_flow(double t, const TorusField& u) const {
    return nls_nonlinear_flow(u, t, f_, kernel_hat_);
  }

  [[nodiscard]] double norm(const TorusField& u) const { return l2_norm(u); }

  [[nodiscard]] const TorusGrid& grid() const noexcept { return grid_; }
  [[nodiscard]] const std::vector<cplx>& kernel_hat() const noexcept {
    return kernel_hat_;
  }

 private:
  TorusGrid grid_;
  std::function<double(double)> f_;
  std::vector<cplx> kernel_hat_;
};

}  // namespace splitflow::problems
