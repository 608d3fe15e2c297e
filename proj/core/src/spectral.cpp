#include "splitflow/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace splitflow {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

double aliased_eigenvalue(std::size_t p, std::size_t m) {
  // Evaluated through the signed-frequency form of the fold: the literal
  // 4 m^2 pi^2 (nu^2 - 2(nu - 1/2)_+) cancels catastrophically for p > l
  // (absolute noise ~ 4 pi^2 m^2 eps), while 4 pi^2 k^2 is exact and keeps
  // the lambda_p = lambda_{m-p} symmetry bitwise.
  const long l = static_cast<long>((m - 1) / 2);
  const long k = (static_cast<long>(p) <= l)
                     ? static_cast<long>(p)
                     : static_cast<long>(p) - static_cast<long>(m);
  const double kd = static_cast<double>(k);
  return 4.0 * std::numbers::pi * std::numbers::pi * kd * kd;
}

TorusField linear_flow(const TorusField& u, double t) {
  TorusField coeffs = to_coefficients(u);
  const std::size_t m = coeffs.size();
  for (std::size_t p = 0; p < m; ++p) {
    const double phase = -aliased_eigenvalue(p, m) * t;
    coeffs[p] *= cplx(std::cos(phase), std::sin(phase));
  }
  return u.repr() == FieldRepr::nodes ? to_nodes(coeffs) : coeffs;
}

TorusField poisson_potential(const TorusField& rho, double neutrality_tol) {
  TorusField rho_hat = to_coefficients(rho);
  const std::size_t m = rho_hat.size();
  const double mean_mag = std::abs(rho_hat[0]);
  if (!(mean_mag <= neutrality_tol)) {
    throw NeutralityError(
        "poisson_potential: source is not neutral, |rho_hat_0| = " +
            std::to_string(mean_mag),
        mean_mag);
  }
  TorusField v_hat(rho_hat.grid(), FieldRepr::coefficients);
  v_hat[0] = cplx(0.0, 0.0);
  for (std::size_t p = 1; p < m; ++p) {
    const double k = two_pi * static_cast<double>(rho_hat.grid().signed_freq(p));
    v_hat[p] = -rho_hat[p] / (k * k);
  }
  return rho.repr() == FieldRepr::nodes ? to_nodes(v_hat) : v_hat;
}

TorusField project_spectrum(const TorusField& u, double R) {
  TorusField coeffs = to_coefficients(u);
  const std::size_t m = coeffs.size();
  for (std::size_t p = 0; p < m; ++p) {
    if (aliased_eigenvalue(p, m) > R) coeffs[p] = cplx(0.0, 0.0);
  }
  return u.repr() == FieldRepr::nodes ? to_nodes(coeffs) : coeffs;
}

double sobolev_norm(const TorusField& u, double theta) {
  const TorusField coeffs = to_coefficients(u);
  const std::size_t m = coeffs.size();
  double acc = 0.0;
  for (std::size_t p = 0; p < m; ++p) {
    acc += std::pow(1.0 + aliased_eigenvalue(p, m), theta) * std::norm(coeffs[p]);
  }
  return std::sqrt(acc);
}

double h1_graph_norm(const TorusField& u) {
  const TorusField coeffs = to_coefficients(u);
  const std::size_t m = coeffs.size();
  double acc = 0.0;
  for (std::size_t p = 0; p < m; ++p) {
    const double lambda = aliased_eigenvalue(p, m);
    acc += (1.0 + lambda * lambda) * std::norm(coeffs[p]);
  }
  return std::sqrt(acc);
}

TorusField trig_interpolate(const TorusField& u, const TorusGrid& fine) {
  const TorusGrid& coarse = u.grid();
  if (fine.size() < coarse.size()) {
    throw Error("trig_interpolate: target grid must be at least as fine");
  }
  const TorusField coeffs = to_coefficients(u);
  TorusField out(fine, FieldRepr::coefficients);
  for (std::size_t p = 0; p < coarse.size(); ++p) {
    const long k = coarse.signed_freq(p);
    const std::size_t p_fine =
        (k >= 0) ? static_cast<std::size_t>(k)
                 : fine.size() - static_cast<std::size_t>(-k);
    out[p_fine] = coeffs[p];
  }
  return u.repr() == FieldRepr::nodes ? to_nodes(out) : out;
}

}  // namespace splitflow
