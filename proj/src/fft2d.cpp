#include "fft2d.hpp"

#include <algorithm>
#include <mutex>
#include <new>

namespace entwave::detail {

namespace {

// FFTW's planner is not thread-safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

FftBuffer make_fft_buffer(std::size_t n) {
  auto* p = static_cast<std::complex<double>*>(fftw_malloc(sizeof(std::complex<double>) * n));
  if (!p) throw std::bad_alloc();
  return FftBuffer(p);
}

int fast_fft_size(int n) {
  for (int m = std::max(n, 1);; ++m) {
    int r = m;
    for (int p : {2, 3, 5, 7}) {
      while (r % p == 0) r /= p;
    }
    if (r == 1) return m;
  }
}

Fft2d::Fft2d(int px, int py) : px_(px), py_(py) {
  FftBuffer scratch = make_fft_buffer(size());
  std::lock_guard lock(planner_mutex());
  forward_ = fftw_plan_dft_2d(px_, py_, as_fftw(scratch.get()), as_fftw(scratch.get()), FFTW_FORWARD,
                              FFTW_ESTIMATE);
  backward_ = fftw_plan_dft_2d(px_, py_, as_fftw(scratch.get()), as_fftw(scratch.get()), FFTW_BACKWARD,
                               FFTW_ESTIMATE);
}

Fft2d::~Fft2d() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(forward_);
  fftw_destroy_plan(backward_);
}

void Fft2d::forward(std::complex<double>* data) const { fftw_execute_dft(forward_, as_fftw(data), as_fftw(data)); }

void Fft2d::backward(std::complex<double>* data) const {
  fftw_execute_dft(backward_, as_fftw(data), as_fftw(data));
}

}  // namespace entwave::detail
