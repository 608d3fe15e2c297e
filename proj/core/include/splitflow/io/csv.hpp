#pragma once

#include <string>
#include <vector>

#include "splitflow/oracle/convergence.hpp"
#include "splitflow/torus.hpp"

namespace splitflow::io {

/// Formats a double with 17 significant digits, enough for exact
/// round-tripping through text.
[[nodiscard]] std::string full_precision(double value);

/// Field dump, node representation: header `q,x,re,im`, one row per node.
void write_field_csv(const std::string& path, const TorusField& field);

/// Reads a field dump back; the grid size is the row count.
[[nodiscard]] TorusField read_field_csv(const std::string& path);

/// Per-step trajectory: header `k,t,norm_l2`.
void write_trajectory_csv(const std::string& path,
                          const std::vector<double>& times,
                          const std::vector<double>& norms);

/// Convergence table: header `res,h,err_l2,err_linf`, rows sorted as given,
/// then one fit-summary comment line `# slope=<v> r2=<v>`.
void write_report_csv(const std::string& path,
                      const oracle::ConvergenceReport& report);

}  // namespace splitflow::io
