#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "splitflow/errors.hpp"

namespace splitflow {

using cplx = std::complex<double>;

/// Equispaced grid x_q = q/m, q = 0..m-1, on the unit torus [0, 1).
/// m = 2l + 1 is required odd so the resolved signed frequencies
/// -l..l are symmetric and the Nyquist ambiguity never arises.
class TorusGrid {
 public:
  TorusGrid() = default;

  explicit TorusGrid(std::size_t m) : m_(m) {
    if (m < 3 || m % 2 == 0) {
      throw InvalidGridError("TorusGrid: m must be odd and >= 3, got " +
                             std::to_string(m));
    }
  }

  [[nodiscard]] std::size_t size() const noexcept { return m_; }
  [[nodiscard]] std::size_t half_modes() const noexcept { return (m_ - 1) / 2; }

  [[nodiscard]] double node(std::size_t q) const noexcept {
    return static_cast<double>(q) / static_cast<double>(m_);
  }

  /// Representative in -l..l of the frequency index p in 0..m-1.
  [[nodiscard]] long signed_freq(std::size_t p) const noexcept {
    const auto l = half_modes();
    return (p <= l) ? static_cast<long>(p)
                    : static_cast<long>(p) - static_cast<long>(m_);
  }

  friend bool operator==(const TorusGrid& a, const TorusGrid& b) noexcept {
    return a.m_ == b.m_;
  }

 private:
  std::size_t m_ = 0;
};

enum class FieldRepr { nodes, coefficients };
enum class DftDirection { forward, inverse };

/// A complex scalar field on a TorusGrid, stored either as node values U_q
/// or Fourier coefficients u_hat_p.  The transform pair is
///
///   forward:  u_hat_p = (1/m) sum_q U_q exp(-i 2 pi p q / m)
///   inverse:  U_q     =       sum_p u_hat_p exp(+i 2 pi p q / m)
///
/// so Parseval reads (1/m) sum_q |U_q|^2 = sum_p |u_hat_p|^2 and the discrete
/// L2 norm is representation independent.
class TorusField {
 public:
  TorusField() = default;

  TorusField(TorusGrid grid, FieldRepr repr)
      : grid_(grid), repr_(repr), data_(grid.size(), cplx(0.0, 0.0)) {}

  TorusField(TorusGrid grid, FieldRepr repr, std::vector<cplx> data)
      : grid_(grid), repr_(repr), data_(std::move(data)) {
    if (data_.size() != grid_.size()) {
      throw InvalidGridError("TorusField: data size does not match grid");
    }
  }

  [[nodiscard]] const TorusGrid& grid() const noexcept { return grid_; }
  [[nodiscard]] FieldRepr repr() const noexcept { return repr_; }
  [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }

  [[nodiscard]] const std::vector<cplx>& data() const noexcept { return data_; }
  [[nodiscard]] std::vector<cplx>& data() noexcept { return data_; }

  [[nodiscard]] const cplx& operator[](std::size_t i) const noexcept {
    return data_[i];
  }
  [[nodiscard]] cplx& operator[](std::size_t i) noexcept { return data_[i]; }

 private:
  TorusGrid grid_;
  FieldRepr repr_ = FieldRepr::nodes;
  std::vector<cplx> data_;
};

/// Applies the transform in the stated direction.  forward requires node
/// representation, inverse requires coefficient representation; violating
/// that is a programming error and throws.
[[nodiscard]] TorusField dft(const TorusField& field, DftDirection direction);

/// Representation coercions; no-ops when already there.
[[nodiscard]] TorusField to_nodes(const TorusField& field);
[[nodiscard]] TorusField to_coefficients(const TorusField& field);

/// Discrete L2 norm, evaluated directly in the field's current
/// representation (no transform): sqrt((1/m) sum |U_q|^2) on nodes,
/// sqrt(sum |u_hat_p|^2) on coefficients.
[[nodiscard]] double l2_norm(const TorusField& field);

/// l2_norm(a - b); the fields must share a grid and representation.
[[nodiscard]] double l2_distance(const TorusField& a, const TorusField& b);

/// Max node-value magnitude of a - b (fields coerced to node representation).
[[nodiscard]] double linf_distance(const TorusField& a, const TorusField& b);

/// Samples f at the grid nodes into a node-representation field.
template <class F>
[[nodiscard]] TorusField sample_field(const TorusGrid& grid, F&& f) {
  std::vector<cplx> values(grid.size());
  for (std::size_t q = 0; q < grid.size(); ++q) {
    values[q] = cplx(f(grid.node(q)));
  }
  return TorusField(grid, FieldRepr::nodes, std::move(values));
}

}  // namespace splitflow
