#pragma once

#include <complex>
#include <span>

namespace splitflow::detail {

/// Unnormalized discrete Fourier transforms on m points (any m >= 1):
///
///   forward:  out_p = sum_q in_q exp(-i 2 pi p q / m)
///   backward: out_q = sum_p in_p exp(+i 2 pi p q / m)
///
/// in and out must have equal size and must not alias.  Plans are cached per
/// size behind a mutex; execution is safe from concurrent threads.
void fft_forward_raw(std::span<const std::complex<double>> in,
                     std::span<std::complex<double>> out);
void fft_backward_raw(std::span<const std::complex<double>> in,
                      std::span<std::complex<double>> out);

}  // namespace splitflow::detail
