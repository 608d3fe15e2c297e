#include "splitflow/scheme.hpp"

#include <cmath>
#include <utility>

#include "splitflow/errors.hpp"

namespace splitflow {

SplittingScheme make_scheme(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::lie:
      return {"lie", {{1.0, 1.0}}};
    case SchemeKind::strang:
      return {"strang", {{0.5, 1.0}, {0.5, 0.0}}};
    case SchemeKind::yoshida4: {
      // Triple-jump composition strang(w1 h) o strang(w0 h) o strang(w1 h),
      // with adjacent linear sub-flows merged across the zero-length
      // nonlinear sub-flows of the inner strang steps.
      const double cbrt2 = std::cbrt(2.0);
      const double w1 = 1.0 / (2.0 - cbrt2);
      const double w0 = 1.0 - 2.0 * w1;
      return {"yoshida4",
              {{0.5 * w1, w1},
               {0.5 * (w1 + w0), w0},
               {0.5 * (w0 + w1), w1},
               {0.5 * w1, 0.0}}};
    }
  }
  throw InvalidSchemeError("unknown scheme kind");
}

SplittingScheme make_scheme(const std::string& name) {
  if (name == "lie") return make_scheme(SchemeKind::lie);
  if (name == "strang") return make_scheme(SchemeKind::strang);
  if (name == "yoshida4") return make_scheme(SchemeKind::yoshida4);
  throw InvalidSchemeError("unknown scheme name: '" + name +
                           "' (expected lie, strang or yoshida4)");
}

void validate_scheme(const SplittingScheme& scheme) {
  if (scheme.stages.empty()) {
    throw InvalidSchemeError("scheme '" + scheme.name + "' has no stages");
  }
  double sum_a = 0.0;
  double sum_b = 0.0;
  for (const auto& st : scheme.stages) {
    if (!std::isfinite(st.a) || !std::isfinite(st.b)) {
      throw InvalidSchemeError("scheme '" + scheme.name +
                               "' has a non-finite stage coefficient");
    }
    sum_a += st.a;
    sum_b += st.b;
  }
  constexpr double tol = 1e-14;
  if (std::abs(sum_a - 1.0) > tol || std::abs(sum_b - 1.0) > tol) {
    throw InvalidSchemeError("scheme '" + scheme.name +
                             "' violates sum a_j = sum b_j = 1");
  }
}

std::vector<std::pair<double, double>> substeps(const SplittingScheme& scheme,
                                                double h) {
  std::vector<std::pair<double, double>> out;
  out.reserve(scheme.stages.size());
  for (const auto& st : scheme.stages) {
    out.emplace_back(st.a * h, st.b * h);
  }
  return out;
}

StepFunctions::StepFunctions(SplittingScheme scheme) : scheme_(std::move(scheme)) {
  validate_scheme(scheme_);
}

double StepFunctions::value(double t, bool want_alpha) const noexcept {
  const auto m = static_cast<double>(scheme_.stages.size());
  double s = t - std::floor(t);  // wrap to [0, 1)
  auto j = static_cast<std::size_t>(s * m);
  if (j >= scheme_.stages.size()) j = scheme_.stages.size() - 1;  // s*m == m rounding
  const double frac = s * m - static_cast<double>(j);
  const bool first_half = frac < 0.5;
  if (want_alpha) {
    return first_half ? 2.0 * m * scheme_.stages[j].a : 0.0;
  }
  return first_half ? 0.0 : 2.0 * m * scheme_.stages[j].b;
}

double StepFunctions::alpha(double t) const noexcept { return value(t, true); }

double StepFunctions::beta(double t) const noexcept { return value(t, false); }

double StepFunctions::integral_from_zero(double t, bool want_alpha) const noexcept {
  // Valid for any real t: with period 1 and unit period-integral,
  // int_0^t = floor(t) + int_0^{t - floor(t)}.
  const auto m = scheme_.stages.size();
  const auto md = static_cast<double>(m);
  const double periods = std::floor(t);
  double acc = periods;  // each full period integrates to sum a_j = sum b_j = 1
  const double s = t - periods;
  for (std::size_t j = 0; j < m; ++j) {
    // Support interval of the active half of stage j within [0, 1).
    const double lo = want_alpha ? static_cast<double>(j) / md
                                 : (static_cast<double>(j) + 0.5) / md;
    const double hi = lo + 0.5 / md;
    const double overlap = std::max(0.0, std::min(s, hi) - lo);
    if (overlap <= 0.0) continue;
    const double level =
        2.0 * md * (want_alpha ? scheme_.stages[j].a : scheme_.stages[j].b);
    acc += level * overlap;
  }
  return acc;
}

double StepFunctions::integrate_alpha(double t0, double t1) const noexcept {
  return integral_from_zero(t1, true) - integral_from_zero(t0, true);
}

double StepFunctions::integrate_beta(double t0, double t1) const noexcept {
  return integral_from_zero(t1, false) - integral_from_zero(t0, false);
}

std::vector<double> StepFunctions::breakpoints() const {
  const auto m = scheme_.stages.size();
  std::vector<double> pts;
  pts.reserve(2 * m + 1);
  for (std::size_t k = 0; k <= 2 * m; ++k) {
    pts.push_back(static_cast<double>(k) / (2.0 * static_cast<double>(m)));
  }
  return pts;
}

StepFunctions step_functions(const SplittingScheme& scheme) {
  return StepFunctions(scheme);
}

}  // namespace splitflow
