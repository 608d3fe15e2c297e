#include "splitflow/tools/run_config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "splitflow/errors.hpp"

namespace splitflow::tools {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
  throw ConfigError("config: " + message);
}

std::string require_string(const json& value, const std::string& key) {
  if (!value.is_string()) fail("key \"" + key + "\" must be a string");
  return value.get<std::string>();
}

std::size_t require_size(const json& value, const std::string& key) {
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    fail("key \"" + key + "\" must be a nonnegative integer");
  }
  return value.get<std::size_t>();
}

double require_number(const json& value, const std::string& key) {
  if (!value.is_number()) fail("key \"" + key + "\" must be a number");
  return value.get<double>();
}

std::vector<std::size_t> require_size_list(const json& value,
                                           const std::string& key) {
  if (!value.is_array()) fail("key \"" + key + "\" must be an integer array");
  std::vector<std::size_t> out;
  out.reserve(value.size());
  for (const auto& entry : value) out.push_back(require_size(entry, key));
  return out;
}

bool known_problem(const std::string& name) {
  return name == "sp" || name == "nls" || name == "wave";
}

bool known_scheme(const std::string& name) {
  return name == "lie" || name == "strang" || name == "yoshida4";
}

void check_ascending(const std::vector<std::size_t>& list,
                     const std::string& key) {
  if (list.empty()) fail("key \"" + key + "\" must be a nonempty list");
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i] < 1) fail("key \"" + key + "\" entries must be >= 1");
    if (i + 1 < list.size() && list[i] >= list[i + 1]) {
      fail("key \"" + key + "\" must be strictly ascending");
    }
  }
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) fail("top level must be a JSON object");

  RunConfig config;
  for (const auto& [key, value] : root.items()) {
    if (key == "problem") {
      config.problem = require_string(value, key);
    } else if (key == "scheme") {
      config.scheme = require_string(value, key);
    } else if (key == "m") {
      config.m = require_size(value, key);
    } else if (key == "n") {
      config.n = require_size(value, key);
    } else if (key == "n_list") {
      config.n_list = require_size_list(value, key);
    } else if (key == "m_list") {
      config.m_list = require_size_list(value, key);
    } else if (key == "T") {
      config.T = require_number(value, key);
    } else if (key == "alpha") {
      config.alpha = require_number(value, key);
    } else if (key == "nu") {
      config.nu = require_number(value, key);
    } else if (key == "kernel") {
      if (value.is_string()) {
        const std::string name = value.get<std::string>();
        if (name != "none" && name != "green") {
          fail("key \"kernel\" must be \"none\", \"green\" or a number array");
        }
        config.kernel = name;
        config.kernel_values.clear();
      } else if (value.is_array()) {
        config.kernel = "custom";
        config.kernel_values.clear();
        config.kernel_values.reserve(value.size());
        for (const auto& entry : value) {
          config.kernel_values.push_back(require_number(entry, key));
        }
      } else {
        fail("key \"kernel\" must be \"none\", \"green\" or a number array");
      }
    } else if (key == "ref_n") {
      config.ref_n = require_size(value, key);
    } else if (key == "ref_m") {
      config.ref_m = require_size(value, key);
    } else if (key == "seed") {
      config.seed = static_cast<std::uint64_t>(require_size(value, key));
    } else if (key == "out") {
      config.out = require_string(value, key);
    } else {
      fail("unknown key \"" + key + "\"");
    }
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

void validate_common(const RunConfig& config) {
  if (!known_problem(config.problem)) {
    fail("key \"problem\" must be one of sp, nls, wave; got \"" +
         config.problem + "\"");
  }
  if (!known_scheme(config.scheme)) {
    fail("key \"scheme\" must be one of lie, strang, yoshida4; got \"" +
         config.scheme + "\"");
  }
  if (config.m < 3 || config.m % 2 == 0) {
    fail("key \"m\" must be odd and >= 3; got " + std::to_string(config.m));
  }
  if (!(config.T > 0.0) || !std::isfinite(config.T)) {
    fail("key \"T\" must be positive");
  }
  if (!(config.alpha >= 0.0) || !std::isfinite(config.alpha)) {
    fail("key \"alpha\" must be nonnegative");
  }
  if (!std::isfinite(config.nu)) fail("key \"nu\" must be finite");
  if (config.out.empty()) fail("key \"out\" must be a nonempty path");
}

namespace {

// The Hartree kernel is resolved on the run's own grid, so an explicit
// coefficient list must match m.  Only meaningful for fixed-grid commands.
void check_kernel_size(const RunConfig& config) {
  if (config.kernel == "custom" && config.problem == "nls" &&
      config.kernel_values.size() != config.m) {
    fail("key \"kernel\" coefficient list must have exactly m = " +
         std::to_string(config.m) + " entries; got " +
         std::to_string(config.kernel_values.size()));
  }
}

}  // namespace

void validate_for_solve(const RunConfig& config) {
  validate_common(config);
  check_kernel_size(config);
  if (config.n < 1) fail("key \"n\" must be >= 1");
}

void validate_for_converge_time(const RunConfig& config) {
  validate_common(config);
  check_kernel_size(config);
  check_ascending(config.n_list, "n_list");
  if (config.ref_n < 8 * config.n_list.back()) {
    fail("key \"ref_n\" must be >= 8x max(n_list) = " +
         std::to_string(8 * config.n_list.back()));
  }
  if (config.ref_n % 2 != 0) {
    fail("key \"ref_n\" must be even (the reference is checked against its "
         "half-resolution run)");
  }
}

void validate_for_converge_space(const RunConfig& config) {
  validate_common(config);
  if (config.problem == "wave") {
    fail("converge-space needs the torus grid; key \"problem\" must be sp or "
         "nls");
  }
  if (config.n < 1) fail("key \"n\" must be >= 1");
  check_ascending(config.m_list, "m_list");
  for (const std::size_t m : config.m_list) {
    if (m % 2 == 0 || m < 3) {
      fail("key \"m_list\" entries must be odd and >= 3; got " +
           std::to_string(m));
    }
  }
  if (config.ref_m % 2 == 0 || config.ref_m < 4 * config.m_list.back()) {
    fail("key \"ref_m\" must be odd and >= 4x max(m_list) = " +
         std::to_string(4 * config.m_list.back()));
  }
  if (config.kernel == "custom" && config.problem == "nls") {
    fail("key \"kernel\" cannot be a fixed-size coefficient list in a grid "
         "sweep; use \"none\" or \"green\"");
  }
}

}  // namespace splitflow::tools
