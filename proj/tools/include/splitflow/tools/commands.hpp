#pragma once

#include <ostream>

#include "splitflow/tools/run_config.hpp"

namespace splitflow::tools {

/// Runs one fixed-step evolution and writes the per-step trajectory CSV and
/// the final-state dump into the output directory.  Prints a wall-clock and
/// FFT cost-model (n * m * log2 m) summary to the log; a norm-guard trip is
/// reported with its step index and is a valid outcome, not an error.
void cmd_solve(const RunConfig& config, std::ostream& log);

/// Time-convergence sweep at fixed grid: each n in n_list runs to time T and
/// is compared against a strang reference with ref_n steps.  Writes the
/// report CSV and a log-log SVG; throws ReferenceNotConvergedError when the
/// reference fails its Richardson self-check.
void cmd_converge_time(const RunConfig& config, std::ostream& log);

/// Space-convergence sweep at fixed time stepping: each m in m_list runs the
/// full solver and is compared, after trigonometric injection, against the
/// ref_m run.  Writes the report CSV and a log-log SVG.
void cmd_converge_space(const RunConfig& config, std::ostream& log);

/// Prints the scheme catalogue: names, stage tables and validation status.
void cmd_schemes(std::ostream& log);

}  // namespace splitflow::tools
