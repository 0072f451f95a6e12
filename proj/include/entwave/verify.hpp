#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "entwave/ccwt.hpp"
#include "entwave/fock.hpp"
#include "entwave/grid.hpp"
#include "entwave/wavelets.hpp"

namespace entwave {

// One side of the Parseval identity against the other.
struct ParsevalReport {
  cplx lhs;  // int dmu/mu^3 int d^2 kappa/pi W_{g1} W*_{g2}
  cplx rhs;  // C'psi int d^2 eta/pi g2* g1
  double rel_error = 0.0;
  double mu_min = 0.0;
  double mu_max = 0.0;
  std::size_t scale_count = 0;
  ComplexPlaneGrid grid;
};

// |lhs - rhs| / max(|rhs|, 1e-12).
double relative_error(cplx lhs, cplx rhs);

// Throws NonAdmissibleError for a non-admissible wavelet and
// PreconditionError when the fields live on different grids.
ParsevalReport parseval_pairing(const Field& g1, const Field& g2, const MotherWavelet& w,
                                const ScaleGrid& scales, Engine engine = Engine::Fft);
ParsevalReport energy_isometry(const Field& g, const MotherWavelet& w, const ScaleGrid& scales,
                               Engine engine = Engine::Fft);

// (1/C') int dmu/mu^5 int d^2 kappa/pi psi((eta' - kappa)/mu) psi*((eta - kappa)/mu)
// over the truncated scale grid and kappa grid.
cplx reproducing_kernel(cplx eta, cplx eta_prime, const MotherWavelet& w, const ScaleGrid& scales,
                        const ComplexPlaneGrid& kappa_grid);

// Isometry lhs for each state's eta-representation sampled on `grid`.
std::vector<double> constant_scan(const std::vector<StateDescriptor>& states, const MotherWavelet& w,
                                  const ScaleGrid& scales, const ComplexPlaneGrid& grid,
                                  Engine engine = Engine::Fft);

struct OracleCheck {
  cplx closed;
  cplx quadrature;
  double error = 0.0;  // |closed - quadrature| / max(1, |closed|)
};

// int d^2 z / pi exp(zeta |z|^2 + xi z + eta z*) = -(1/zeta) exp(-xi eta / zeta).
// Throws PreconditionError for Re(zeta) >= 0.
cplx oracle_gaussian_integral(cplx zeta, cplx xi, cplx eta);
OracleCheck check_gaussian_integral(cplx zeta, cplx xi, cplx eta);

// int_0^inf u (1 - u x^2/2)(1 - u y^2/2) exp(-u (x^2 + y^2)/2) du
//   = -4 (x^4 - 4 x^2 y^2 + y^4) / (x^2 + y^2)^4.
// Throws PreconditionError for x = y = 0.
double oracle_scale_integral(double x, double y);
OracleCheck check_scale_integral(double x, double y);

// Settings shared by the verification suites.
struct SuiteConfig {
  int grid_n = 513;
  double grid_extent = 32.0;
  int scale_count = 64;
  double mu_min = 0.25;
  double mu_max = 32.0;
  MotherWavelet wavelet = MotherWavelet::emhw();
  Engine engine = Engine::Fft;
  double theorem_tolerance = 0.05;
  double range_tolerance = 0.01;
  double oracle_tolerance = 1e-6;
  // Reproducing-kernel checks.
  int kernel_grid_n = 129;
  double kernel_grid_extent = 8.0;
  int kernel_scale_count = 240;
  double kernel_mu_min = 1e-3;
  double kernel_mu_max = 8.0;
  double kernel_separation = 3.0;
  double kernel_ratio_tolerance = 0.01;
  double kernel_growth_min = 3.0;
  int oracle_draws = 50;
  unsigned seed = 20071;

  ComplexPlaneGrid grid() const { return ComplexPlaneGrid::symmetric(grid_n, grid_extent); }
  ScaleGrid scales() const { return ScaleGrid::log_spaced(scale_count, mu_min, mu_max); }
};

// Reads key=value lines (keys as in SuiteConfig, plus kind= and coeffs=).
SuiteConfig parse_suite_config(const std::string& text, SuiteConfig base = {});

struct ReportRow {
  std::string name;
  cplx lhs;
  cplx rhs;
  double rel_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Suites: parseval, kernel, constants, oracles, all. Throws
// PreconditionError for an unknown suite.
std::vector<ReportRow> run_suite(const std::string& name, const SuiteConfig& config);
bool is_known_suite(const std::string& name);

// CSV with header case,lhs_re,lhs_im,rhs_re,rhs_im,rel_error.
void write_report_csv(std::ostream& os, const std::vector<ReportRow>& rows);
std::string format_report_table(const std::vector<ReportRow>& rows);

}  // namespace entwave
