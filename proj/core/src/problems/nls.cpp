#include "splitflow/problems/nls.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "splitflow/errors.hpp"

namespace splitflow::problems {

std::vector<cplx> green_kernel_coefficients(const TorusGrid& grid) {
  std::vector<cplx> kernel(grid.size());
  kernel[0] = cplx(0.0, 0.0);
  for (std::size_t p = 1; p < grid.size(); ++p) {
    const double k =
        2.0 * std::numbers::pi * static_cast<double>(grid.signed_freq(p));
    kernel[p] = cplx(1.0 / (k * k), 0.0);
  }
  return kernel;
}

std::vector<double> hartree_term(const TorusField& u,
                                 const std::vector<cplx>& kernel_hat) {
  const TorusField un = to_nodes(u);
  const std::size_t m = un.size();
  if (kernel_hat.size() != m) {
    throw Error("hartree_term: kernel size does not match grid");
  }

  std::vector<cplx> intensity(m);
  for (std::size_t q = 0; q < m; ++q) {
    intensity[q] = cplx(std::norm(un[q]), 0.0);
  }
  TorusField n_hat = dft(TorusField(un.grid(), FieldRepr::nodes, std::move(intensity)),
                         DftDirection::forward);
  for (std::size_t p = 0; p < m; ++p) n_hat[p] *= kernel_hat[p];
  const TorusField conv = dft(n_hat, DftDirection::inverse);

  std::vector<double> out(m);
  for (std::size_t q = 0; q < m; ++q) out[q] = conv[q].real();
  return out;
}

TorusField nls_nonlinear_flow(const TorusField& u, double t,
                              const std::function<double(double)>& f,
                              const std::vector<cplx>& kernel_hat) {
  const TorusField un = to_nodes(u);
  const std::size_t m = un.size();

  std::vector<double> phase(m, 0.0);
  if (f) {
    for (std::size_t q = 0; q < m; ++q) {
      const double value = f(std::norm(un[q]));
      if (!std::isfinite(value)) {
        throw Error("nls_nonlinear_flow: f returned a non-finite value");
      }
      phase[q] = value;
    }
  }
  if (!kernel_hat.empty()) {
    const std::vector<double> conv = hartree_term(un, kernel_hat);
    for (std::size_t q = 0; q < m; ++q) phase[q] += conv[q];
  }

  TorusField out = un;
  for (std::size_t q = 0; q < m; ++q) {
    const double theta = t * phase[q];
    out[q] *= cplx(std::cos(theta), std::sin(theta));
  }
  return u.repr() == FieldRepr::nodes ? out : to_coefficients(out);
}

NLSProblem::NLSProblem(TorusGrid grid, std::function<double(double)> f,
                       std::vector<cplx> kernel_hat)
    : grid_(grid), f_(std::move(f)), kernel_hat_(std::move(kernel_hat)) {
  if (!kernel_hat_.empty() && kernel_hat_.size() != grid_.size()) {
    throw Error("NLSProblem: kernel size does not match grid");
  }
}

}  // namespace splitflow::problems
