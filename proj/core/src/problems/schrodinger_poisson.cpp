#include "splitflow/problems/schrodinger_poisson.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "splitflow/errors.hpp"

namespace splitflow::problems {

double gamma_alpha(double alpha) {
  // Work in log space; both arguments are positive for alpha > -3/2.
  const double log_gamma =
      std::lgamma(alpha + 2.0) - std::lgamma(alpha + 2.5);
  return std::exp(log_gamma) / std::sqrt(std::numbers::pi);
}

InitialData make_rough_initial_data(double alpha, const TorusGrid& grid) {
  const double exponent = 1.5 + alpha;
  std::vector<cplx> u0(grid.size());
  u0[0] = cplx(0.0, 0.0);  // sin(pi * 0) = 0; the power is taken as 0
  for (std::size_t q = 1; q < grid.size(); ++q) {
    const double s = std::sin(std::numbers::pi * grid.node(q));
    u0[q] = cplx(std::exp(exponent * std::log(s)), 0.0);
  }

  const double g = gamma_alpha(alpha);
  const double c4 = 1.0 + 16.0 * std::numbers::pi * std::numbers::pi;
  std::vector<double> source(grid.size());
  for (std::size_t q = 0; q < grid.size(); ++q) {
    source[q] =
        g * (1.0 + c4 * std::cos(4.0 * std::numbers::pi * grid.node(q)));
  }

  return InitialData{TorusField(grid, FieldRepr::nodes, std::move(u0)),
                     std::move(source)};
}

TorusField sp_nonlinear_flow(const TorusField& u, double t,
                             const std::vector<double>& source,
                             double neutrality_tol) {
  const TorusField un = to_nodes(u);
  const std::size_t m = un.size();
  if (source.size() != m) {
    throw Error("sp_nonlinear_flow: source size does not match grid");
  }

  std::vector<cplx> rho(m);
  for (std::size_t q = 0; q < m; ++q) {
    rho[q] = cplx(source[q] - std::norm(un[q]), 0.0);
  }
  const TorusField potential = poisson_potential(
      TorusField(un.grid(), FieldRepr::nodes, std::move(rho)), neutrality_tol);

  TorusField out = un;
  for (std::size_t q = 0; q < m; ++q) {
    const double theta = t * (potential[q].real() + std::norm(un[q]));
    out[q] *= cplx(std::cos(theta), std::sin(theta));
  }
  return u.repr() == FieldRepr::nodes ? out : to_coefficients(out);
}

SchrodingerPoissonProblem::SchrodingerPoissonProblem(TorusGrid grid,
                                                     std::vector<double> source,
                                                     double neutrality_tol)
    : grid_(grid), source_(std::move(source)), neutrality_tol_(neutrality_tol) {
  if (source_.size() != grid_.size()) {
    throw Error("SchrodingerPoissonProblem: source size does not match grid");
  }
  if (!(neutrality_tol_ > 0.0)) {
    throw Error("SchrodingerPoissonProblem: neutrality tolerance must be > 0");
  }
}

void SchrodingerPoissonProblem::validate_neutrality(const TorusField& u0) const {
  double mean_source = 0.0;
  for (const double d : source_) mean_source += d;
  mean_source /= static_cast<double>(source_.size());
  const double n0 = l2_norm(u0);
  const double residual = std::abs(mean_source - n0 * n0);
  if (!(residual <= neutrality_tol_)) {
    throw NeutralityError(
        "Schroedinger--Poisson binding: |D_hat_0 - ||u0||^2| = " +
            std::to_string(residual) + " exceeds the neutrality tolerance",
        residual);
  }
}

}  // namespace splitflow::problems
