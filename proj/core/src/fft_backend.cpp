#include "splitflow/detail/fft_backend.hpp"

#include <fftw3.h>

#include <cassert>
#include <map>
#include <mutex>

namespace splitflow::detail {
namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

// Process-lifetime plan cache.  Plan creation is not thread-safe in FFTW,
// hence the mutex; executing a cached plan on fresh arrays is.
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

PlanPair& plans_for(int n) {
  static std::map<int, PlanPair> cache;
  std::lock_guard<std::mutex> lock(plan_mutex());
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // FFTW_UNALIGNED lets the plan run on arbitrarily aligned caller buffers;
  // FFTW_ESTIMATE keeps planning cheap and does not touch the arrays.
  fftw_complex* a = fftw_alloc_complex(static_cast<std::size_t>(n));
  fftw_complex* b = fftw_alloc_complex(static_cast<std::size_t>(n));
  PlanPair pair;
  pair.forward =
      fftw_plan_dft_1d(n, a, b, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  pair.backward =
      fftw_plan_dft_1d(n, a, b, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(a);
  fftw_free(b);
  return cache.emplace(n, pair).first->second;
}

void execute(fftw_plan plan, std::span<const std::complex<double>> in,
             std::span<std::complex<double>> out) {
  assert(in.size() == out.size());
  assert(in.data() != out.data());
  // Out-of-place c2c plans preserve their input; the cast is safe.
  auto* in_raw = reinterpret_cast<fftw_complex*>(
      const_cast<std::complex<double>*>(in.data()));
  auto* out_raw = reinterpret_cast<fftw_complex*>(out.data());
  fftw_execute_dft(plan, in_raw, out_raw);
}

}  // namespace

void fft_forward_raw(std::span<const std::complex<double>> in,
                     std::span<std::complex<double>> out) {
  execute(plans_for(static_cast<int>(in.size())).forward, in, out);
}

void fft_backward_raw(std::span<const std::complex<double>> in,
                      std::span<std::complex<double>> out) {
  execute(plans_for(static_cast<int>(in.size())).backward, in, out);
}

}  // namespace splitflow::detail
