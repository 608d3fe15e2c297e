#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace splitflow::oracle {

/// One sweep entry: resolution is the swept parameter (time steps n or grid
/// size m), h the matching step (T/n or 1/m).
struct ConvergenceRow {
  double res = 0.0;
  double h = 0.0;
  double err_l2 = 0.0;
  double err_linf = 0.0;
};

struct OrderFit {
  double slope = std::numeric_limits<double>::quiet_NaN();
  double r2 = std::numeric_limits<double>::quiet_NaN();
  std::size_t dropped = 0;  // largest-h points removed by the fit window
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;  // sorted by decreasing h
  double slope = std::numeric_limits<double>::quiet_NaN();
  double r2 = std::numeric_limits<double>::quiet_NaN();
  std::size_t dropped_points = 0;
  bool fit_skipped = false;
  std::string notice;        // set when the fit is skipped
  double reference_gap = 0;  // Richardson gap of the reference (time studies)
  std::vector<std::size_t> monotonicity_flags;  // rows where err grew with res
};

/// Least-squares fit of log(err) against log(h).  Rows with nonpositive or
/// non-finite error are excluded; fewer than 3 usable rows with distinct h
/// raise InsufficientDataError.
[[nodiscard]] OrderFit order_estimate(const std::vector<double>& h,
                                      const std::vector<double>& err);

/// Convenience overload fitting the L2 column of report rows.
[[nodiscard]] OrderFit order_estimate(const std::vector<ConvergenceRow>& rows);

/// order_estimate with the pre-asymptotic window rule: when the full fit has
/// r2 < 0.98 and at least 5 points are available, the two largest-h points
/// are dropped once and the fit repeated.
[[nodiscard]] OrderFit fit_with_window(std::vector<double> h,
                                       std::vector<double> err);

/// Shared post-processing for study drivers: applies the error floor
/// (fit skipped with a notice when fewer than 3 rows rise above it), the
/// windowed fit and the monotonicity flags.  Rows must already be sorted by
/// decreasing h.
void finalize_report(ConvergenceReport& report, double error_floor);

}  // namespace splitflow::oracle
