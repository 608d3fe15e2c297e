#include "splitflow/torus.hpp"

#include <algorithm>
#include <cmath>

#include "splitflow/detail/fft_backend.hpp"

namespace splitflow {

TorusField dft(const TorusField& field, DftDirection direction) {
  const std::size_t m = field.size();
  std::vector<cplx> out(m);
  if (direction == DftDirection::forward) {
    if (field.repr() != FieldRepr::nodes) {
      throw Error("dft: forward transform requires node representation");
    }
    detail::fft_forward_raw(field.data(), out);
    const double inv_m = 1.0 / static_cast<double>(m);
    for (auto& v : out) v *= inv_m;
    return TorusField(field.grid(), FieldRepr::coefficients, std::move(out));
  }
  if (field.repr() != FieldRepr::coefficients) {
    throw Error("dft: inverse transform requires coefficient representation");
  }
  detail::fft_backward_raw(field.data(), out);
  return TorusField(field.grid(), FieldRepr::nodes, std::move(out));
}

TorusField to_nodes(const TorusField& field) {
  return field.repr() == FieldRepr::nodes ? field
                                          : dft(field, DftDirection::inverse);
}

TorusField to_coefficients(const TorusField& field) {
  return field.repr() == FieldRepr::coefficients
             ? field
             : dft(field, DftDirection::forward);
}

double l2_norm(const TorusField& field) {
  double acc = 0.0;
  for (const auto& v : field.data()) acc += std::norm(v);
  if (field.repr() == FieldRepr::nodes) {
    acc /= static_cast<double>(field.size());
  }
  return std::sqrt(acc);
}

double l2_distance(const TorusField& a, const TorusField& b) {
  if (!(a.grid() == b.grid()) || a.repr() != b.repr()) {
    throw Error("l2_distance: fields must share grid and representation");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::norm(a[i] - b[i]);
  if (a.repr() == FieldRepr::nodes) acc /= static_cast<double>(a.size());
  return std::sqrt(acc);
}

double linf_distance(const TorusField& a, const TorusField& b) {
  if (!(a.grid() == b.grid())) {
    throw Error("linf_distance: fields must share a grid");
  }
  const TorusField an = to_nodes(a);
  const TorusField bn = to_nodes(b);
  double mx = 0.0;
  for (std::size_t i = 0; i < an.size(); ++i) {
    mx = std::max(mx, std::abs(an[i] - bn[i]));
  }
  return mx;
}

}  // namespace splitflow
