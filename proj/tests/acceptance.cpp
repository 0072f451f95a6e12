// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "entwave/ccwt.hpp"
#include "entwave/error.hpp"
#include "entwave/fock.hpp"
#include "entwave/specfun.hpp"
#include "entwave/verify.hpp"
#include "entwave/wavelets.hpp"

using namespace entwave;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class F>
auto timed(double& secs, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  auto r = f();
  secs = seconds_since(t0);
  return r;
}

Field vacuum(const ComplexPlaneGrid& g) {
  return sample([](cplx z) { return std::exp(-0.5 * std::norm(z)); }, g);
}

double relative_l2(const Field& a, const Field& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t m = 0; m < a.grid().size(); ++m) {
    num += std::norm(a.values()[m] - b.values()[m]);
    den += std::norm(b.values()[m]);
  }
  return std::sqrt(num / den);
}

// L_n by its explicit series.
double laguerre_series(int n, double x) {
  long double sum = 0.0L, binom = 1.0L, xp = 1.0L, kf = 1.0L;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) binom = binom * (n - k + 1) / k, xp *= x, kf *= k;
    sum += ((k % 2) ? -1.0L : 1.0L) * binom * xp / kf;
  }
  return static_cast<double>(sum);
}

// int d^2 z / pi exp(zeta |z|^2 + xi z + eta z*) by a plain trapezoid over a
// square wide enough for the Gaussian envelope.
cplx gaussian_integral_by_trapezoid(cplx zeta, cplx xi, cplx eta) {
  const double a = -zeta.real();
  const double cx = (xi + eta).real() / (2 * a), cy = -(xi - eta).imag() / (2 * a);
  const double half = std::sqrt(40.0 / a);
  const int n = 801;
  const double h = 2 * half / (n - 1);
  cplx sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double wi = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    for (int j = 0; j < n; ++j) {
      const double wj = (j == 0 || j == n - 1) ? 0.5 : 1.0;
      const cplx z(cx - half + i * h, cy - half + j * h);
      sum += wi * wj * std::exp(zeta * std::norm(z) + xi * z + eta * std::conj(z));
    }
  }
  return sum * h * h / M_PI;
}

// int_0^inf u (1 - u x^2/2)(1 - u y^2/2) e^{-u (x^2+y^2)/2} du with u = e^s,
// trapezoid in s.
double scale_integral_by_trapezoid(double x, double y) {
  const double h = 1e-3;
  double sum = 0.0;
  for (double s = -40.0; s <= 8.0; s += h) {
    const double u = std::exp(s);
    sum += u * u * (1 - 0.5 * u * x * x) * (1 - 0.5 * u * y * y) * std::exp(-0.5 * u * (x * x + y * y));
  }
  return sum * h;
}

void criterion1() {
  double t = 0.0;
  const double c = timed(t, [] { return c_psi_prime(MotherWavelet::emhw()); });
  const double err = std::abs(c - 0.5);
  report(1, "C'psi of the entangled Mexican hat", err <= 1e-3 && t < 1.0,
         fmt("value=%.12f |err|=%.2e (tol 1e-3) time=%.3fs (limit 1s)", c, err, t));
}

void criterion2() {
  double t = 0.0;
  const ComplexPlaneGrid g = default_grid();
  const MotherWavelet w = MotherWavelet::emhw();
  const Field ft = timed(t, [&] { return symplectic_fourier(sample([&](cplx z) { return eval_wavelet(w, z); }, g), g); });
  double worst = 0.0;
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) {
      const cplx xi = g.node(i, j);
      const double r2 = std::norm(xi);
      if (r2 > 16.0) continue;
      worst = std::max(worst, std::abs(ft(i, j) - 0.5 * r2 * std::exp(-0.5 * r2)));
    }
  report(2, "closed-form Fourier transform", worst <= 1e-4 && t < 10.0,
         fmt("max abs error on |xi|<=4 = %.2e (tol 1e-4) time=%.2fs (limit 10s)", worst, t));
}

void criterion3() {
  const ComplexPlaneGrid g = default_grid();
  const MotherWavelet w = MotherWavelet::emhw();
  const double hat = std::abs(admissibility_defect(sample([&](cplx z) { return eval_wavelet(w, z); }, g)));
  const double gauss = std::abs(admissibility_defect(vacuum(g)));
  report(3, "admissibility defects", hat <= 1e-8 && std::abs(gauss - 1.0) <= 1e-6,
         fmt("Mexican hat defect=%.2e (tol 1e-8), Gaussian defect=%.9f (1 +- 1e-6)", hat, gauss));
}

void criterion4() {
  double t = 0.0;
  const Field g = vacuum(default_grid());
  const MotherWavelet w = MotherWavelet::emhw();
  const auto [base, wide] = timed(t, [&] {
    return std::pair{parseval_pairing(g, g, w, default_scales(), Engine::Fft),
                     parseval_pairing(g, g, w, default_scales().doubled_range(), Engine::Fft)};
  });
  const double lhs = base.lhs.real();
  const double err = std::abs(lhs - 0.5) / 0.5;
  const double change = std::abs(wide.lhs.real() - lhs) / std::abs(lhs);
  report(4, "Parseval on default grids", err <= 0.05 && change < 0.01 && t < 300.0,
         fmt("lhs=%.6f rel err vs 0.5=%.4f (tol 0.05); doubled-range lhs=%.6f change=%.4f (tol 0.01); time=%.1fs",
             lhs, err, wide.lhs.real(), change, t));
}

void criterion5() {
  const SuiteConfig cfg;
  const ComplexPlaneGrid grid = cfg.grid();
  const MotherWavelet w = MotherWavelet::emhw();
  const Field g = vacuum(grid);
  const Field back = inverse(forward_fast(g, w, cfg.scales()), w, c_psi_prime(w), grid);
  const double err2d = relative_l2(back, g);

  const Wavelet1D psi = mexican_hat_1d();
  const Signal1D f = Signal1D::sample([](double x) { return std::exp(-0.5 * x * x); }, -8.0, 0.05, 321);
  const Cwt1dCoefficients c = cwt1d_transform(f, psi, ScaleGrid::log_spaced(96, 0.1, 1000.0));
  const RadialProfile hat_ft = RadialProfile::sample(
      [&](double p) { return fourier_1d(MotherWavelet::mexican_hat_1d(), p); }, 1e-4, 1e-3, 12000);
  const Signal1D f_back = icwt1d(c, psi, c_psi_1d(hat_ft), f);
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    num += std::norm(f_back.samples[k] - f.samples[k]);
    den += std::norm(f.samples[k]);
  }
  const double err1d = std::sqrt(num / den);
  report(5, "inversion round trips", err2d <= 0.05 && err1d <= 0.05,
         fmt("2D rel L2=%.4f on %dx%d extent %g, %d scales [%g,%g] (tol 0.05); 1D rel L2=%.4f (tol 0.05)", err2d,
             grid.nx, grid.ny, cfg.grid_extent, cfg.scale_count, cfg.mu_min, cfg.mu_max, err1d));
}

void criterion6() {
  const SuiteConfig cfg;
  const std::vector<StateDescriptor> states = {NumberStateSpec{0, 0}, NumberStateSpec{1, 1},
                                               CoherentStateSpec{{0.5, 0.0}, {0.3, 0.0}}};
  const std::vector<double> v = constant_scan(states, MotherWavelet::emhw(), cfg.scales(), cfg.grid());
  bool in_band = true;
  for (double x : v) in_band = in_band && x >= 0.475 && x <= 0.525;
  const double ratio = *std::max_element(v.begin(), v.end()) / *std::min_element(v.begin(), v.end());
  report(6, "constant independence", in_band && ratio <= 1.05,
         fmt("|0,0>=%.5f |1,1>=%.5f coherent=%.5f (band [0.475,0.525]); max/min=%.4f (tol 1.05)", v[0], v[1], v[2],
             ratio));
}

void criterion7() {
  const SuiteConfig cfg;
  const MotherWavelet w = MotherWavelet::emhw();
  const ComplexPlaneGrid coarse = ComplexPlaneGrid::symmetric(cfg.kernel_grid_n, cfg.kernel_grid_extent);
  const ComplexPlaneGrid fine = ComplexPlaneGrid::symmetric(2 * cfg.kernel_grid_n - 1, cfg.kernel_grid_extent);
  const ScaleGrid scales = ScaleGrid::log_spaced(cfg.kernel_scale_count, cfg.kernel_mu_min, cfg.kernel_mu_max);
  const cplx eta = cplx(1.0, 1.0) * (coarse.dx / 3.0);
  const double same = std::abs(reproducing_kernel(eta, eta, w, scales, coarse));
  const double far = std::abs(reproducing_kernel(eta, eta + 3.0, w, scales, coarse));
  const double refined = std::abs(reproducing_kernel(eta, eta, w, scales, fine));
  const double ratio = far / same, growth = refined / same;
  report(7, "reproducing-kernel dichotomy", ratio <= 0.01 && growth >= 3.0,
         fmt("|K(sep 3)|/K(coincident)=%.2e (tol 0.01); coincident growth under 2x refinement=%.3f (min 3)", ratio,
             growth));
}

void criterion8() {
  std::mt19937 rng(20071);
  std::uniform_real_distribution<double> unit(-1.0, 1.0), decay(0.5, 2.0), axis(0.3, 3.0);
  double g_worst = 0.0, s_worst = 0.0, h_worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const cplx zeta(-decay(rng), unit(rng)), xi(unit(rng), unit(rng)), eta(unit(rng), unit(rng));
    const cplx closed = oracle_gaussian_integral(zeta, xi, eta);
    g_worst = std::max(g_worst, std::abs(closed - gaussian_integral_by_trapezoid(zeta, xi, eta)) /
                                    std::max(1.0, std::abs(closed)));
  }
  for (int k = 0; k < 50; ++k) {
    const double x = axis(rng), y = axis(rng);
    const double closed = oracle_scale_integral(x, y);
    s_worst = std::max(s_worst, std::abs(closed - scale_integral_by_trapezoid(x, y)) / std::max(1.0, std::abs(closed)));
  }
  std::uniform_real_distribution<double> rad(0.0, 3.0), ang(0.0, 2 * M_PI);
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k < 20; ++k) {
      const cplx e = std::polar(rad(rng), ang(rng));
      const cplx lhs = ((n % 2) ? -1.0 : 1.0) * hermite2(n, n, e, std::conj(e));
      const double rhs = std::tgamma(n + 1.0) * laguerre_series(n, std::norm(e));
      h_worst = std::max(h_worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
  report(8, "oracle identities", g_worst <= 1e-6 && s_worst <= 1e-6 && h_worst <= 1e-10,
         fmt("Gaussian integral worst=%.2e, scale integral worst=%.2e (tol 1e-6, 50 draws each); "
             "H/Laguerre worst=%.2e (tol 1e-10, n<=10)",
             g_worst, s_worst, h_worst));
}

void criterion9() {
  const ComplexPlaneGrid grid = default_grid();
  const MotherWavelet w = MotherWavelet::emhw();
  const ScaleGrid scales = default_scales();
  const Field g = vacuum(grid);
  double t_fft = 0.0, t_direct = 0.0;
  const CcwtCoefficients fast = timed(t_fft, [&] { return forward_fast(g, w, scales); });
  const CcwtCoefficients direct = timed(t_direct, [&] { return forward(g, w, scales); });
  double worst = max_relative_difference(fast, direct);

  // The rest of the corpus on every 16th scale of the default grid.
  const std::vector<double> mu = {scales[0], scales[16], scales[32], scales[48], scales[63]};
  const ScaleGrid subset = ScaleGrid::log_spaced(5, mu.front(), mu.back());
  const std::vector<std::function<cplx(cplx)>> corpus = {
      [](cplx z) { return number_state_eta(1, 1, z); },
      [](cplx z) { return number_state_eta(2, 1, z); },
      [](cplx z) { return coherent_state_eta({0.5, 0.0}, {0.3, 0.0}, z); },
      [&](cplx z) { return eval_wavelet(w, z); },
  };
  for (const auto& fn : corpus) {
    const Field f = sample(fn, grid);
    worst = std::max(worst, max_relative_difference(forward_fast(f, w, subset), forward(f, w, subset)));
  }
  const double speedup = t_direct / t_fft;
  report(9, "engine equivalence", worst <= 1e-10 && speedup >= 10.0,
         fmt("max per-plane relative difference=%.2e (tol 1e-10); fft %.2fs vs direct %.1fs, speedup %.0fx (min 10x)",
             worst, t_fft, t_direct, speedup));
}

void criterion10() {
  const double gram = max_deviation_from_identity(completeness_gram(3, default_grid()));
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> rad(0.0, 2.0), ang(0.0, 2 * M_PI);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const cplx xi = std::polar(rad(rng), ang(rng)), eta = std::polar(rad(rng), ang(rng));
    const cplx closed = 0.5 * std::exp(cplx(0.0, xi.real() * eta.imag() - xi.imag() * eta.real()));
    worst = std::max(worst, std::abs(xi_eta_resummation(xi, eta, 40) - closed));
  }
  const double at_origin = std::abs(xi_eta_resummation(0.0, 0.0, 40) - 0.5);
  worst = std::max(worst, at_origin);
  report(10, "Fock consistency", gram <= 1e-6 && worst <= 1e-6,
         fmt("|G-I|max=%.2e (tol 1e-6); <xi|eta> resummation at N=40 worst error=%.3e, at origin %.3e (tol 1e-6)",
             gram, worst, at_origin));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                        criterion6, criterion7, criterion8, criterion9, criterion10};
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    try {
      criteria[k]();
    } catch (const std::exception& e) {
      report(static_cast<int>(k + 1), "exception", false, e.what());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
