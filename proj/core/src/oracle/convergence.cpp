#include "splitflow/oracle/convergence.hpp"

#include <algorithm>
#include <cmath>

#include "splitflow/errors.hpp"

namespace splitflow::oracle {

namespace {

struct LogData {
  std::vector<double> x;  // log h
  std::vector<double> y;  // log err
};

LogData usable_log_data(const std::vector<double>& h,
                        const std::vector<double>& err) {
  if (h.size() != err.size()) {
    throw Error("order_estimate: h and err lengths differ");
  }
  LogData data;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!(h[i] > 0.0) || !std::isfinite(h[i])) continue;
    if (!(err[i] > 0.0) || !std::isfinite(err[i])) continue;
    data.x.push_back(std::log(h[i]));
    data.y.push_back(std::log(err[i]));
  }
  return data;
}

OrderFit fit_log_data(const LogData& data) {
  const std::size_t n = data.x.size();
  std::vector<double> distinct = data.x;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (n < 3 || distinct.size() < 3) {
    throw InsufficientDataError(
        "order_estimate: need at least 3 usable rows with distinct h");
  }

  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += data.x[i];
    my += data.y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);

  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (data.x[i] - mx) * (data.x[i] - mx);
    sxy += (data.x[i] - mx) * (data.y[i] - my);
  }
  OrderFit fit;
  fit.slope = sxy / sxx;
  const double intercept = my - fit.slope * mx;

  double ss_res = 0.0, ss_tot = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double predicted = intercept + fit.slope * data.x[i];
    ss_res += (data.y[i] - predicted) * (data.y[i] - predicted);
    ss_tot += (data.y[i] - my) * (data.y[i] - my);
  }
  fit.r2 = (ss_tot > 0.0) ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

}  // namespace

OrderFit order_estimate(const std::vector<double>& h,
                        const std::vector<double>& err) {
  return fit_log_data(usable_log_data(h, err));
}

OrderFit order_estimate(const std::vector<ConvergenceRow>& rows) {
  std::vector<double> h, err;
  h.reserve(rows.size());
  err.reserve(rows.size());
  for (const auto& row : rows) {
    h.push_back(row.h);
    err.push_back(row.err_l2);
  }
  return order_estimate(h, err);
}

OrderFit fit_with_window(std::vector<double> h, std::vector<double> err) {
  OrderFit fit = order_estimate(h, err);
  if (fit.r2 >= 0.98 || h.size() < 5) return fit;

  // Drop the two largest-h points once; pre-asymptotic pollution is
  // expected for rough data.
  std::vector<std::size_t> idx(h.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return h[a] > h[b]; });
  std::vector<double> h2, err2;
  for (std::size_t i = 2; i < idx.size(); ++i) {
    h2.push_back(h[idx[i]]);
    err2.push_back(err[idx[i]]);
  }
  OrderFit windowed = order_estimate(h2, err2);
  windowed.dropped = 2;
  return windowed;
}

void finalize_report(ConvergenceReport& report, double error_floor) {
  std::vector<double> h, err;
  for (const auto& row : report.rows) {
    if (row.err_l2 > error_floor) {
      h.push_back(row.h);
      err.push_back(row.err_l2);
    }
  }

  if (h.size() < 3) {
    report.fit_skipped = true;
    report.notice = (h.empty())
                        ? "all errors at or below the rounding floor; fit skipped"
                        : "fewer than 3 rows above the error floor; fit skipped";
    return;
  }

  const OrderFit fit = fit_with_window(h, err);
  report.slope = fit.slope;
  report.r2 = fit.r2;
  report.dropped_points = fit.dropped;

  // Rows are sorted by decreasing h, i.e. increasing resolution: flag any
  // error growth along that direction (floor-level rows exempt).
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    const double prev = report.rows[i - 1].err_l2;
    const double cur = report.rows[i].err_l2;
    if (cur > error_floor && prev > error_floor && cur > prev * (1.0 + 1e-9)) {
      report.monotonicity_flags.push_back(i);
    }
  }
}

}  // namespace splitflow::oracle
