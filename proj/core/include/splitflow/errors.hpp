#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace splitflow {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scheme coefficients violate the consistency conditions (sum a_j = sum b_j = 1).
class InvalidSchemeError : public Error {
 public:
  using Error::Error;
};

/// Grid construction with an invalid mode count (m must be odd and >= 3).
class InvalidGridError : public Error {
 public:
  using Error::Error;
};

/// A mean-field source term failed the neutrality precondition.
/// Carries the offending mean magnitude |rho_hat_0|.
class NeutralityError : public Error {
 public:
  NeutralityError(const std::string& what, double mean_magnitude)
      : Error(what), mean_magnitude_(mean_magnitude) {}

  [[nodiscard]] double mean_magnitude() const noexcept { return mean_magnitude_; }

 private:
  double mean_magnitude_ = 0.0;
};

/// The state became non-finite (NaN/Inf) during time stepping.
/// Carries the index of the step that produced it.
class NonFiniteStateError : public Error {
 public:
  NonFiniteStateError(const std::string& what, std::size_t step_index)
      : Error(what), step_index_(step_index) {}

  [[nodiscard]] std::size_t step_index() const noexcept { return step_index_; }

 private:
  std::size_t step_index_ = 0;
};

/// A reference run failed its self-consistency (Richardson) check.
class ReferenceNotConvergedError : public Error {
 public:
  using Error::Error;
};

/// An independent oracle integration failed its step-doubling check.
class OracleNotConvergedError : public Error {
 public:
  using Error::Error;
};

/// Too few usable data points for a least-squares order fit.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// Malformed run configuration (bad JSON, unknown keys, invalid values).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace splitflow
