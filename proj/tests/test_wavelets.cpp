#include <gtest/gtest.h>

#include <cmath>

#include "entwave/error.hpp"
#include "entwave/grid.hpp"
#include "entwave/specfun.hpp"
#include "entwave/wavelets.hpp"

using namespace entwave;

namespace {

// 4 int_0^inf |psi(r)|^2 dr / r for psi = (r^2/2) e^{-r^2/2} is
// int_0^inf r^3 e^{-r^2} dr = Gamma(2) / 2.
constexpr double kEmhwConstant = 0.5;

double max_abs_diff_on_disc(const Field& a, const std::function<cplx(cplx)>& ref, double radius) {
  double worst = 0.0;
  const ComplexPlaneGrid& g = a.grid();
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) {
      const cplx z = g.node(i, j);
      if (std::abs(z) <= radius) worst = std::max(worst, std::abs(a(i, j) - ref(z)));
    }
  return worst;
}

}  // namespace

TEST(Wavelets, EmhwShape) {
  const MotherWavelet w = MotherWavelet::emhw();
  for (double r : {0.0, 0.5, 1.0, 1.7, 3.0}) {
    const double t = r * r;
    EXPECT_NEAR(eval_wavelet(w, std::polar(r, 0.3)).real(), std::exp(-t / 2) * (1 - t / 2), 1e-14);
  }
}

TEST(Wavelets, LaguerreFamilyReproducesEmhw) {
  const MotherWavelet a = MotherWavelet::emhw();
  const MotherWavelet b = MotherWavelet::laguerre_gaussian({0.5, 0.5});
  for (double t : {0.0, 0.2, 1.0, 4.0, 9.0}) EXPECT_NEAR(a.radial(t), b.radial(t), 1e-15);
  EXPECT_NEAR(c_psi_prime(a), c_psi_prime(b), 1e-14);
}

TEST(Wavelets, AdmissibilityDefect) {
  EXPECT_NEAR(std::abs(admissibility_defect(MotherWavelet::emhw())), 0.0, 1e-12);
  EXPECT_NEAR(admissibility_defect(MotherWavelet::laguerre_gaussian({1.0})).real(), 1.0, 1e-12);
  const ComplexPlaneGrid g = default_grid();
  const Field gauss = sample([](cplx z) { return std::exp(-0.5 * std::norm(z)); }, g);
  EXPECT_NEAR(admissibility_defect(gauss).real(), 1.0, 1e-6);
  const MotherWavelet w = MotherWavelet::emhw();
  const Field hat = sample([&](cplx z) { return eval_wavelet(w, z); }, g);
  EXPECT_LE(std::abs(admissibility_defect(hat)), 1e-8);
}

TEST(Wavelets, CPrimeEmhw) {
  EXPECT_NEAR(c_psi_prime(MotherWavelet::emhw()), kEmhwConstant, 1e-6);
}

TEST(Wavelets, CPrimeScalesQuadratically) {
  const MotherWavelet w = MotherWavelet::laguerre_gaussian({0.2, 0.5, 0.15});
  ASSERT_LE(std::abs(admissibility_defect(w)), 1e-12);
  const double base = c_psi_prime(w);
  EXPECT_NEAR(c_psi_prime(w.scaled(3.0)), 9.0 * base, 1e-9 * base);
}

TEST(Wavelets, CPrimeRejectsGaussian) {
  try {
    c_psi_prime(MotherWavelet::laguerre_gaussian({1.0, 0.0}));
    FAIL() << "expected NonAdmissibleError";
  } catch (const NonAdmissibleError& e) {
    EXPECT_NEAR(e.defect(), 1.0, 1e-12);
  }
}

TEST(Wavelets, EnergyMatchesQuadrature) {
  const MotherWavelet w = MotherWavelet::laguerre_gaussian({0.3, 0.1, 0.2, -0.15});
  const Field f = sample([&](cplx z) { return std::norm(eval_wavelet(w, z)); }, default_grid());
  EXPECT_NEAR(wavelet_energy(w), integrate(f, Measure::D2OverPi).real(), 1e-9);
  const MotherWavelet u = MotherWavelet::laguerre_gaussian_unit_energy({0.5, 0.5});
  EXPECT_NEAR(wavelet_energy(u), 1.0, 1e-14);
  EXPECT_NEAR(wavelet_energy(MotherWavelet::emhw()), 0.5, 1e-14);
}

TEST(Wavelets, FourierClosedMatchesQuadrature) {
  const ComplexPlaneGrid g = default_grid();
  const MotherWavelet w = MotherWavelet::emhw();
  const Field hat = sample([&](cplx z) { return eval_wavelet(w, z); }, g);
  const ComplexPlaneGrid xi = ComplexPlaneGrid::symmetric(41, 4.0);
  const Field ft = symplectic_fourier(hat, xi);
  const double err =
      max_abs_diff_on_disc(ft, [](cplx z) { return 0.5 * std::norm(z) * std::exp(-0.5 * std::norm(z)); }, 4.0);
  EXPECT_LE(err, 1e-4);
  for (int i = 0; i < xi.nx; i += 7)
    for (int j = 0; j < xi.ny; j += 7) EXPECT_NEAR(std::abs(ft(i, j) - fourier_closed(w, xi.node(i, j))), 0.0, 1e-4);
}

// A non-radial test function checks the sign convention of the phase:
// f = eta e^{-|eta|^2/2} has transform -xi e^{-|xi|^2/2} under
// exp[(xi* eta - xi eta*)/2].
TEST(Wavelets, FourierPhaseConvention) {
  const ComplexPlaneGrid g = ComplexPlaneGrid::symmetric(161, 9.0);
  const Field f = sample([](cplx z) { return z * std::exp(-0.5 * std::norm(z)); }, g);
  const ComplexPlaneGrid xi = ComplexPlaneGrid::symmetric(9, 2.0);
  const Field ft = symplectic_fourier(f, xi);
  const double err =
      max_abs_diff_on_disc(ft, [](cplx z) { return -z * std::exp(-0.5 * std::norm(z)); }, 3.0);
  EXPECT_LE(err, 1e-8);
}

TEST(Wavelets, FourierRejectsUndecayedSamples) {
  const ComplexPlaneGrid g = ComplexPlaneGrid::symmetric(33, 2.0);
  const Field f = sample([](cplx z) { return std::exp(-0.5 * std::norm(z)); }, g);
  EXPECT_THROW(symplectic_fourier(f, g), PreconditionError);
}

TEST(Wavelets, LaguerreFourierMatchesEmhwClosedForm) {
  const MotherWavelet lg = MotherWavelet::laguerre_gaussian({0.5, 0.5});
  for (double r : {0.1, 0.8, 2.0, 3.5}) EXPECT_NEAR(fourier_closed(lg, r).real(), 0.5 * r * r * std::exp(-0.5 * r * r), 1e-14);
}

TEST(Wavelets, OneDimensionalConstant) {
  // |psi(p)|^2 / p = 2 pi p^3 e^{-p^2}; integral over (0, inf) is pi.
  const MotherWavelet hat = MotherWavelet::mexican_hat_1d();
  const RadialProfile p = RadialProfile::sample([&](double r) { return fourier_1d(hat, r); }, 1e-4, 1e-3, 12000);
  EXPECT_NEAR(c_psi_1d(p), M_PI, 1e-6);
  // Unit prefactor p^2 e^{-p^2/2} gives 1/2.
  const RadialProfile q = RadialProfile::sample([](double r) { return r * r * std::exp(-0.5 * r * r); }, 1e-4, 1e-3, 12000);
  EXPECT_NEAR(c_psi_1d(q), 0.5, 1e-6);
  EXPECT_NEAR(c_psi_1d(RadialProfile::sample([](double) { return 0.0; }, 0.1, 0.1, 50)), 0.0, 0.0);
  // Scaling the profile by a scales the constant by a^2.
  const RadialProfile q3 = RadialProfile::sample([](double r) { return 3 * r * r * std::exp(-0.5 * r * r); }, 1e-4, 1e-3, 12000);
  EXPECT_NEAR(c_psi_1d(q3), 9.0 * c_psi_1d(q), 1e-12);
  const RadialProfile cut = RadialProfile::sample([](double r) { return r * r * std::exp(-0.5 * r * r); }, 1e-4, 1e-3, 2000);
  EXPECT_THROW(c_psi_1d(cut), DivergentError);
}

TEST(Wavelets, DescriptorRoundTrip) {
  const MotherWavelet w = MotherWavelet::laguerre_gaussian({0.25, 0.5, 0.125});
  const MotherWavelet back = parse_wavelet_descriptor(w.descriptor());
  ASSERT_EQ(back.order(), 3);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(back.coeffs()[k], w.coeffs()[k]);
  EXPECT_EQ(parse_wavelet_descriptor("kind=emhw").kind(), WaveletKind::Emhw);
  EXPECT_EQ(parse_wavelet_descriptor("kind=lg;coeffs=0.5,0.5").order(), 2);
  EXPECT_THROW(parse_wavelet_descriptor("kind=morlet"), PreconditionError);
  EXPECT_THROW(parse_wavelet_descriptor("kind=lg;coeffs=0.5,abc"), PreconditionError);
}
