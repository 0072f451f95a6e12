#pragma once

#include <fftw3.h>

#include <complex>
#include <cstddef>
#include <memory>

namespace entwave::detail {

struct FftwDeleter {
  void operator()(std::complex<double>* p) const { fftw_free(p); }
};
using FftBuffer = std::unique_ptr<std::complex<double>[], FftwDeleter>;

FftBuffer make_fft_buffer(std::size_t n);

// Smallest size >= n whose prime factors are all in {2, 3, 5, 7}.
int fast_fft_size(int n);

// In-place 2D complex transforms of a fixed px x py shape. Plans are built
// once; execute() may be called concurrently from several threads on
// distinct buffers obtained from make_fft_buffer.
class Fft2d {
 public:
  Fft2d(int px, int py);
  ~Fft2d();
  Fft2d(const Fft2d&) = delete;
  Fft2d& operator=(const Fft2d&) = delete;

  int px() const { return px_; }
  int py() const { return py_; }
  std::size_t size() const { return static_cast<std::size_t>(px_) * py_; }

  void forward(std::complex<double>* data) const;
  // Unnormalized inverse (scaled by px * py).
  void backward(std::complex<double>* data) const;

 private:
  int px_;
  int py_;
  fftw_plan forward_ = nullptr;
  fftw_plan backward_ = nullptr;
};

}  // namespace entwave::detail
