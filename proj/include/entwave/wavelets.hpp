#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "entwave/grid.hpp"

namespace entwave {

enum class WaveletKind { LaguerreGaussian, Emhw, MexicanHat1D };

std::string to_string(WaveletKind kind);

// Radial mother wavelet on the complex plane,
//   psi(eta) = exp(-|eta|^2 / 2) sum_n n! K_n L_n(|eta|^2),
// described by its Laguerre coefficients K_n. The entangled Mexican hat is
// the two-term member K = (1/2, 1/2); MexicanHat1D is the real-line baseline
// (1 - x^2) exp(-x^2 / 2).
class MotherWavelet {
 public:
  static MotherWavelet laguerre_gaussian(std::vector<double> coeffs);
  // Coefficients rescaled so that int d^2 eta / pi |psi|^2 = 1.
  static MotherWavelet laguerre_gaussian_unit_energy(std::vector<double> coeffs);
  static MotherWavelet emhw();
  static MotherWavelet mexican_hat_1d();

  WaveletKind kind() const { return kind_; }
  // K_n; (1/2, 1/2) for Emhw, empty for MexicanHat1D.
  std::span<const double> coeffs() const { return coeffs_; }
  int order() const { return static_cast<int>(coeffs_.size()); }

  // Every coefficient multiplied by a.
  MotherWavelet scaled(double a) const;

  // psi as a function of t = |eta|^2 (radial families) or of x (1D).
  double radial(double t) const;

  // Plain-text descriptor: "kind=...\ncoeffs=c0,c1,...\n".
  std::string descriptor() const;

 private:
  MotherWavelet(WaveletKind kind, std::vector<double> coeffs);

  WaveletKind kind_ = WaveletKind::Emhw;
  std::vector<double> coeffs_;
  std::vector<double> laguerre_weights_;  // n! K_n
};

// Parses "kind=emhw|lg|mexhat1d" plus optional "coeffs=..." lines (or the
// same pairs separated by ';' or whitespace). Throws PreconditionError.
MotherWavelet parse_wavelet_descriptor(const std::string& text);

// psi(eta). For MexicanHat1D the profile is evaluated at x = Re(eta).
cplx eval_wavelet(const MotherWavelet& w, cplx eta);

// Boundary threshold for fields handed to symplectic_fourier.
inline constexpr double kFourierDecayThreshold = 1e-12;

// psi(xi) = int d^2 eta / (2 pi) exp[(xi* eta - xi eta*) / 2] psi(eta), by
// trapezoidal quadrature of the samples at every node of xi_grid. Throws
// PreconditionError if |samples| exceeds kFourierDecayThreshold on the
// boundary.
Field symplectic_fourier(const Field& samples, const ComplexPlaneGrid& xi_grid);

// Closed-form symplectic Fourier transform:
//   exp(-|xi|^2 / 2) sum_n K_n H_{n,n}(|xi|, |xi|)   (LaguerreGaussian)
//   (1/2) |xi|^2 exp(-|xi|^2 / 2)                  (Emhw)
// Throws PreconditionError for MexicanHat1D.
cplx fourier_closed(const MotherWavelet& w, cplx xi);

// Fourier transform of the 1D baseline, int psi(x) e^{-ipx} dx.
double fourier_1d(const MotherWavelet& w, double p);

// int d^2 eta / (2 pi) psi(eta) = sum_n (-1)^n n! K_n.
cplx admissibility_defect(const MotherWavelet& w);
// The same integral by quadrature over sampled values.
cplx admissibility_defect(const Field& samples);

inline constexpr double kAdmissibilityTolerance = 1e-12;
inline constexpr double kAdmissibilityQuadratureTolerance = 1e-8;

// int d^2 eta / pi |psi|^2, in closed form (Laguerre orthonormality).
double wavelet_energy(const MotherWavelet& w);

// C'_psi = 4 int_0^inf |psi(xi)|^2 d|xi| / |xi|, by log-spaced trapezoid on
// [1e-6, 12] with Richardson refinement. Throws NonAdmissibleError when the
// defect exceeds 1e-8 and DivergentError when refinement does not settle.
double c_psi_prime(const MotherWavelet& w);

// Samples of a function of |xi| on r_k = start + k * spacing.
struct RadialProfile {
  double start = 0.0;
  double spacing = 0.0;
  std::vector<double> values;

  static RadialProfile sample(const std::function<double(double)>& f, double start, double spacing,
                              int count);
  double radius(std::size_t k) const { return start + static_cast<double>(k) * spacing; }
  void validate() const;
};

// C_psi = int_0^inf |psi(p)|^2 / p dp for the 1D baseline, by trapezoid over
// the profile. Throws DivergentError when the integrand has not decayed at
// either end of the profile.
double c_psi_1d(const RadialProfile& psi_hat);

}  // namespace entwave
