#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "entwave/grid.hpp"
#include "entwave/wavelets.hpp"

namespace entwave {

// W(mu, kappa) over ScaleGrid x ComplexPlaneGrid, one plane per scale.
struct CcwtCoefficients {
  ScaleGrid scales;
  ComplexPlaneGrid kappa_grid;
  std::vector<std::vector<cplx>> planes;  // planes[k][kappa_grid.index(i, j)]

  cplx at(std::size_t scale, int i, int j) const { return planes[scale][kappa_grid.index(i, j)]; }
};

// Fields handed to the transforms must fall below this fraction of their
// peak magnitude on the grid boundary.
inline constexpr double kTransformDecayThreshold = 1e-8;

enum class Engine { Direct, Fft };

// W(mu, kappa) = (1/mu) int d^2 eta / pi g(eta) psi*((eta - kappa) / mu),
// trapezoidal quadrature over g's grid, summed term by term. kappa runs over
// g's grid unless another grid is given.
CcwtCoefficients forward(const Field& g, const MotherWavelet& w, const ScaleGrid& scales);
CcwtCoefficients forward(const Field& g, const MotherWavelet& w, const ScaleGrid& scales,
                         const ComplexPlaneGrid& kappa_grid);

// Same contract as forward on kappa = g's grid, computed per scale as a
// zero-padded FFT cross-correlation.
CcwtCoefficients forward_fast(const Field& g, const MotherWavelet& w, const ScaleGrid& scales);

CcwtCoefficients forward_with(Engine engine, const Field& g, const MotherWavelet& w,
                              const ScaleGrid& scales);

// Single coefficient (1/mu) int d^2 eta / pi g(eta) psi*((eta - kappa)/mu)
// at an arbitrary kappa, same quadrature as forward.
cplx coefficient_at(const Field& g, const MotherWavelet& w, double mu, cplx kappa);

// g(eta) = (1/C') int dmu / mu^3 int d^2 kappa / (pi mu) W(mu, kappa)
// psi((eta - kappa) / mu), trapezoid in log mu and in kappa. Uses FFT
// convolution when out_grid lies on the kappa lattice, otherwise sums
// directly. Throws PreconditionError for c_prime <= 0.
Field inverse(const CcwtCoefficients& coeffs, const MotherWavelet& w, double c_prime,
              const ComplexPlaneGrid& out_grid);

// Largest |a - b| over all planes divided by the largest |b|.
double max_relative_difference(const CcwtCoefficients& a, const CcwtCoefficients& b);

// Sum_mu weight(mu, power) sum_kappa trapezoid * W1 conj(W2) d^2 kappa / pi.
cplx coefficient_pairing(const CcwtCoefficients& w1, const CcwtCoefficients& w2, int mu_power);

// --- 1D baseline -----------------------------------------------------------

// Samples on x_k = x0 + k dx.
struct Signal1D {
  double x0 = 0.0;
  double dx = 1.0;
  std::vector<cplx> samples;

  double x(std::size_t k) const { return x0 + static_cast<double>(k) * dx; }
  std::size_t size() const { return samples.size(); }
  static Signal1D sample(const std::function<cplx(double)>& f, double x0, double dx, int count);
};

using Wavelet1D = std::function<cplx(double)>;

// (1 - x^2) exp(-x^2 / 2).
Wavelet1D mexican_hat_1d();

// (1 / sqrt(mu)) int f(x) psi*((x - s) / mu) dx by trapezoid.
cplx cwt1d(const Signal1D& f, const Wavelet1D& psi, double mu, double s);

// W(mu, s) for every scale, each on its own translation grid.
struct Cwt1dCoefficients {
  ScaleGrid scales;
  std::vector<Signal1D> rows;  // rows[k] holds W(mu_k, s) over s
};

// Translation grid per scale: spacing dx * max(1, floor(mu / (4 dx))),
// covering the signal support widened by 8 mu on each side.
Cwt1dCoefficients cwt1d_transform(const Signal1D& f, const Wavelet1D& psi, const ScaleGrid& scales);

// f(x) = (1/C_psi) int dmu / mu^2 int W(mu, s) psi((x - s) / mu) ds / sqrt(mu)
// over the truncated scale and translation grids, evaluated on the nodes of
// x_grid. Throws PreconditionError for a non-finite or non-positive c_psi.
Signal1D icwt1d(const Cwt1dCoefficients& coeffs, const Wavelet1D& psi, double c_psi, const Signal1D& x_grid);

}  // namespace entwave
