#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace splitflow::tools {

/// One experiment description, loaded from a JSON config file and optionally
/// overridden by CLI flags.  Every field has a desk-scale default; the
/// command-specific validators below decide which fields are actually
/// required.  Unknown JSON keys are rejected so typos never silently fall
/// back to defaults.
struct RunConfig {
  std::string problem = "sp";      // sp | nls | wave
  std::string scheme = "strang";   // lie | strang | yoshida4
  std::size_t m = 257;             // grid size (odd)
  std::size_t n = 512;             // time steps for a single run
  std::vector<std::size_t> n_list; // step counts for converge-time sweeps
  std::vector<std::size_t> m_list; // grid sizes for converge-space sweeps
  double T = 0.5;                  // final time
  double alpha = 0.01;             // datum roughness parameter
  double nu = 1.0;                 // wave interaction strength
  std::string kernel = "none";     // nls Hartree kernel: none | green | custom
  std::vector<double> kernel_values;  // coefficients when kernel == custom
  std::size_t ref_n = 0;           // reference step count (converge-time)
  std::size_t ref_m = 0;           // reference grid size (converge-space)
  std::uint64_t seed = 0;          // reserved for randomized data
  std::string out = ".";           // output directory
};

/// Parses a JSON object text into a RunConfig.  Throws ConfigError naming
/// the offending key on unknown keys, wrong value types or malformed JSON.
[[nodiscard]] RunConfig parse_config(const std::string& json_text);

/// Reads and parses a config file.  Throws ConfigError if the file cannot
/// be read.
[[nodiscard]] RunConfig load_config(const std::string& path);

/// Shared field checks: problem and scheme names, m odd and >= 3, T > 0,
/// alpha >= 0, finite nu, and a usable custom kernel when one is given.
/// Throws ConfigError naming the field.
void validate_common(const RunConfig& config);

/// validate_common plus n >= 1.
void validate_for_solve(const RunConfig& config);

/// validate_common plus: n_list nonempty, strictly ascending, entries >= 1;
/// ref_n even and >= 8 x max(n_list).
void validate_for_converge_time(const RunConfig& config);

/// validate_common plus: problem on the torus grid (sp or nls), n >= 1 for
/// the fixed time stepping, m_list nonempty strictly ascending odd, ref_m
/// odd and >= 4 x max(m_list), and no fixed-size custom kernel (the sweep
/// changes m).
void validate_for_converge_space(const RunConfig& config);

}  // namespace splitflow::tools
