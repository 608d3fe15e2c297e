#include "splitflow/oracle/studies.hpp"

#include <cstdio>
#include <string>

namespace splitflow::oracle {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

}  // namespace

DiffNorms<TorusField> torus_diff_norms() {
  DiffNorms<TorusField> norms;
  norms.l2 = [](const TorusField& a, const TorusField& b) {
    return l2_distance(a, b);
  };
  norms.linf = [](const TorusField& a, const TorusField& b) {
    return linf_distance(a, b);
  };
  return norms;
}

void require_reference_converged(double richardson_gap, double smallest_error) {
  if (!(richardson_gap <= smallest_error / 10.0)) {
    throw ReferenceNotConvergedError(
        "reference Richardson gap " + sci(richardson_gap) +
        " is not below a tenth of the smallest measured error " +
        sci(smallest_error) + "; increase the reference resolution");
  }
}

ConvergenceReport converge_space_study(
    const std::function<TorusField(std::size_t)>& run_at,
    const std::vector<std::size_t>& m_list, std::size_t ref_m,
    double error_floor) {
  if (m_list.size() < 1) throw Error("converge_space_study: empty m_list");
  for (std::size_t i = 0; i < m_list.size(); ++i) {
    if (m_list[i] % 2 == 0) {
      throw Error("converge_space_study: grid sizes must be odd");
    }
    if (i + 1 < m_list.size() && m_list[i] >= m_list[i + 1]) {
      throw Error("converge_space_study: m_list must be strictly ascending");
    }
  }
  if (ref_m % 2 == 0 || ref_m < 4 * m_list.back()) {
    throw Error("converge_space_study: ref_m must be odd and >= 4x max(m_list)");
  }

  const TorusField fine = to_nodes(run_at(ref_m));

  ConvergenceReport report;
  report.rows.resize(m_list.size());
  detail::parallel_for(m_list.size(), [&](std::size_t i) {
    const std::size_t m = m_list[i];
    const TorusField coarse = run_at(m);
    const TorusField injected = to_nodes(trig_interpolate(coarse, fine.grid()));
    ConvergenceRow row;
    row.res = static_cast<double>(m);
    row.h = 1.0 / static_cast<double>(m);
    row.err_l2 = l2_distance(injected, fine);
    row.err_linf = linf_distance(injected, fine);
    report.rows[i] = row;
  });

  finalize_report(report, error_floor);
  return report;
}

}  // namespace splitflow::oracle
