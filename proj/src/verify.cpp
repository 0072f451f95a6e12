#include "entwave/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "entwave/error.hpp"
#include "entwave/specfun.hpp"

namespace entwave {

namespace {

constexpr double kPi = std::numbers::pi;

ReportRow make_row(std::string name, cplx lhs, cplx rhs, double metric, double tolerance, bool pass) {
  return ReportRow{std::move(name), lhs, rhs, metric, tolerance, pass};
}

ReportRow closeness_row(std::string name, cplx lhs, cplx rhs, double tolerance) {
  const double e = relative_error(lhs, rhs);
  return make_row(std::move(name), lhs, rhs, e, tolerance, e <= tolerance);
}

}  // namespace

double relative_error(cplx lhs, cplx rhs) { return std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-12); }

ParsevalReport parseval_pairing(const Field& g1, const Field& g2, const MotherWavelet& w, const ScaleGrid& scales,
                                Engine engine) {
  if (!(g1.grid() == g2.grid())) throw PreconditionError("parseval_pairing: fields live on different grids");
  const double c_prime = c_psi_prime(w);
  const CcwtCoefficients w1 = forward_with(engine, g1, w, scales);
  const CcwtCoefficients w2 = forward_with(engine, g2, w, scales);

  Field overlap(g1.grid());
  for (std::size_t m = 0; m < g1.grid().size(); ++m) overlap.values()[m] = std::conj(g2.values()[m]) * g1.values()[m];

  ParsevalReport r;
  r.lhs = coefficient_pairing(w1, w2, 3);
  r.rhs = c_prime * integrate(overlap, Measure::D2OverPi);
  r.rel_error = relative_error(r.lhs, r.rhs);
  r.mu_min = scales.mu_min();
  r.mu_max = scales.mu_max();
  r.scale_count = scales.size();
  r.grid = g1.grid();
  return r;
}

ParsevalReport energy_isometry(const Field& g, const MotherWavelet& w, const ScaleGrid& scales, Engine engine) {
  const double c_prime = c_psi_prime(w);
  const CcwtCoefficients coeffs = forward_with(engine, g, w, scales);
  Field energy(g.grid());
  for (std::size_t m = 0; m < g.grid().size(); ++m) energy.values()[m] = std::norm(g.values()[m]);

  ParsevalReport r;
  r.lhs = coefficient_pairing(coeffs, coeffs, 3);
  r.rhs = c_prime * integrate(energy, Measure::D2OverPi);
  r.rel_error = relative_error(r.lhs, r.rhs);
  r.mu_min = scales.mu_min();
  r.mu_max = scales.mu_max();
  r.scale_count = scales.size();
  r.grid = g.grid();
  return r;
}

cplx reproducing_kernel(cplx eta, cplx eta_prime, const MotherWavelet& w, const ScaleGrid& scales,
                        const ComplexPlaneGrid& kappa_grid) {
  const double c_prime = c_psi_prime(w);
  kappa_grid.validate();
  const std::vector<double> mu_w = scale_weights(scales, 5);
  cplx total = 0.0;
  for (std::size_t k = 0; k < scales.size(); ++k) {
    const double mu = scales[k];
    cplx plane = 0.0;
    for (int p = 0; p < kappa_grid.nx; ++p) {
      const double wp = trapezoid_weight(p, kappa_grid.nx);
      cplx row = 0.0;
      for (int q = 0; q < kappa_grid.ny; ++q) {
        const cplx kappa = kappa_grid.node(p, q);
        row += trapezoid_weight(q, kappa_grid.ny) * eval_wavelet(w, (eta_prime - kappa) / mu) *
               std::conj(eval_wavelet(w, (eta - kappa) / mu));
      }
      plane += wp * row;
    }
    total += mu_w[k] * plane;
  }
  return total * (kappa_grid.cell_area() / (kPi * c_prime));
}

std::vector<double> constant_scan(const std::vector<StateDescriptor>& states, const MotherWavelet& w,
                                  const ScaleGrid& scales, const ComplexPlaneGrid& grid, Engine engine) {
  std::vector<double> out;
  out.reserve(states.size());
  for (const StateDescriptor& d : states) {
    const Field g = sample_state(d, grid);
    out.push_back(energy_isometry(g, w, scales, engine).lhs.real());
  }
  return out;
}

cplx oracle_gaussian_integral(cplx zeta, cplx xi, cplx eta) {
  if (!(zeta.real() < 0.0)) throw PreconditionError("Gaussian integral needs Re(zeta) < 0");
  return -std::exp(-xi * eta / zeta) / zeta;
}

OracleCheck check_gaussian_integral(cplx zeta, cplx xi, cplx eta) {
  const cplx closed = oracle_gaussian_integral(zeta, xi, eta);
  // Centre the window on the peak of |integrand| and size it to the envelope.
  const double a = -zeta.real();
  const double bx = (xi + eta).real();
  const double by = -(xi - eta).imag();
  const double cx = bx / (2.0 * a);
  const double cy = by / (2.0 * a);
  const double half = std::sqrt(46.0 / a);
  const double wiggle = std::abs(zeta.imag()) * (half + std::hypot(cx, cy)) + std::abs(xi) + std::abs(eta);
  const double h = std::min(0.5 / std::sqrt(a), 0.5 / (1.0 + wiggle));
  const int n = std::min(4001, 2 * static_cast<int>(std::ceil(half / h)) + 1);
  const double d = 2.0 * half / (n - 1);
  const ComplexPlaneGrid grid{n, n, cx - half, cy - half, d, d};
  const Field f = sample([&](cplx z) { return std::exp(zeta * std::norm(z) + xi * z + eta * std::conj(z)); }, grid);
  const cplx quad = integrate(f, Measure::D2OverPi);
  return OracleCheck{closed, quad, std::abs(closed - quad) / std::max(1.0, std::abs(closed))};
}

double oracle_scale_integral(double x, double y) {
  const double s = x * x + y * y;
  if (!(s > 0.0)) throw PreconditionError("scale integral needs x^2 + y^2 > 0");
  const double x2 = x * x;
  const double y2 = y * y;
  return -4.0 * (x2 * x2 - 4.0 * x2 * y2 + y2 * y2) / std::pow(s, 4);
}

OracleCheck check_scale_integral(double x, double y) {
  const double closed = oracle_scale_integral(x, y);
  const double s = x * x + y * y;
  // u = 2 v / s turns the weight into e^{-v}; composite Simpson on [0, 80].
  auto integrand = [&](double v) {
    const double u = 2.0 * v / s;
    return u * (1.0 - 0.5 * u * x * x) * (1.0 - 0.5 * u * y * y) * std::exp(-v) * (2.0 / s);
  };
  constexpr int panels = 20000;
  constexpr double upper = 80.0;
  const double h = upper / panels;
  double sum = integrand(0.0) + integrand(upper);
  for (int k = 1; k < panels; ++k) sum += (k % 2 ? 4.0 : 2.0) * integrand(k * h);
  const double quad = sum * h / 3.0;
  return OracleCheck{closed, quad, std::abs(closed - quad) / std::max(1.0, std::abs(closed))};
}

SuiteConfig parse_suite_config(const std::string& text, SuiteConfig cfg) {
  std::istringstream in(text);
  std::string line;
  std::string kind;
  std::string coeffs;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw PreconditionError("config: expected key=value, got '" + line + "'");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    key.erase(key.find_last_not_of(" \t") + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    auto num = [&]() {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(value, &used);
      } catch (const std::exception&) {
        throw PreconditionError("config: bad value for " + key);
      }
      if (used != value.size()) throw PreconditionError("config: bad value for " + key);
      return v;
    };
    auto integer = [&]() {
      const double v = num();
      if (v != std::floor(v)) throw PreconditionError("config: " + key + " must be an integer");
      return static_cast<int>(v);
    };
    if (key == "grid_n") cfg.grid_n = integer();
    else if (key == "grid_extent") cfg.grid_extent = num();
    else if (key == "scales") cfg.scale_count = integer();
    else if (key == "mu_min") cfg.mu_min = num();
    else if (key == "mu_max") cfg.mu_max = num();
    else if (key == "kind") kind = value;
    else if (key == "coeffs") coeffs = value;
    else if (key == "engine") {
      if (value == "fft") cfg.engine = Engine::Fft;
      else if (value == "direct") cfg.engine = Engine::Direct;
      else throw PreconditionError("config: engine must be direct or fft");
    }
    else if (key == "theorem_tolerance") cfg.theorem_tolerance = num();
    else if (key == "range_tolerance") cfg.range_tolerance = num();
    else if (key == "oracle_tolerance") cfg.oracle_tolerance = num();
    else if (key == "kernel_grid_n") cfg.kernel_grid_n = integer();
    else if (key == "kernel_grid_extent") cfg.kernel_grid_extent = num();
    else if (key == "kernel_scales") cfg.kernel_scale_count = integer();
    else if (key == "kernel_mu_min") cfg.kernel_mu_min = num();
    else if (key == "kernel_mu_max") cfg.kernel_mu_max = num();
    else if (key == "kernel_separation") cfg.kernel_separation = num();
    else if (key == "oracle_draws") cfg.oracle_draws = integer();
    else if (key == "seed") cfg.seed = static_cast<unsigned>(integer());
    else throw PreconditionError("config: unknown key '" + key + "'");
  }
  if (!kind.empty()) {
    cfg.wavelet = parse_wavelet_descriptor("kind=" + kind + (coeffs.empty() ? "" : "\ncoeffs=" + coeffs));
  } else if (!coeffs.empty()) {
    throw PreconditionError("config: coeffs given without kind");
  }
  // Surface precondition violations before any computation starts.
  cfg.grid();
  cfg.scales();
  ScaleGrid::log_spaced(cfg.kernel_scale_count, cfg.kernel_mu_min, cfg.kernel_mu_max);
  ComplexPlaneGrid::symmetric(cfg.kernel_grid_n, cfg.kernel_grid_extent);
  return cfg;
}

namespace {

std::vector<ReportRow> parseval_suite(const SuiteConfig& cfg) {
  const ComplexPlaneGrid grid = cfg.grid();
  const ScaleGrid scales = cfg.scales();
  const Field vacuum = sample_state(NumberStateSpec{0, 0}, grid);
  const Field n11 = sample_state(NumberStateSpec{1, 1}, grid);

  std::vector<ReportRow> rows;
  const ParsevalReport vac = parseval_pairing(vacuum, vacuum, cfg.wavelet, scales, cfg.engine);
  rows.push_back(closeness_row("parseval_vacuum", vac.lhs, vac.rhs, cfg.theorem_tolerance));

  const ParsevalReport cross = parseval_pairing(vacuum, n11, cfg.wavelet, scales, cfg.engine);
  constexpr double kOrthogonality = 0.02;
  rows.push_back(make_row("parseval_vacuum_vs_11", cross.lhs, cross.rhs, std::abs(cross.lhs), kOrthogonality,
                          std::abs(cross.lhs) <= kOrthogonality));

  const ParsevalReport self11 = parseval_pairing(n11, n11, cfg.wavelet, scales, cfg.engine);
  rows.push_back(closeness_row("parseval_11", self11.lhs, self11.rhs, cfg.theorem_tolerance));

  const ParsevalReport wide = parseval_pairing(vacuum, vacuum, cfg.wavelet, scales.doubled_range(), cfg.engine);
  rows.push_back(closeness_row("parseval_vacuum_range_doubling", wide.lhs, vac.lhs, cfg.range_tolerance));
  return rows;
}

// The coincident point sits a third of a coarse cell off the kappa lattice,
// so its distance to the nearest node halves with every refinement.
std::vector<ReportRow> kernel_suite(const SuiteConfig& cfg) {
  const ComplexPlaneGrid coarse = ComplexPlaneGrid::symmetric(cfg.kernel_grid_n, cfg.kernel_grid_extent);
  const ComplexPlaneGrid fine = ComplexPlaneGrid::symmetric(2 * cfg.kernel_grid_n - 1, cfg.kernel_grid_extent);
  const ScaleGrid scales = ScaleGrid::log_spaced(cfg.kernel_scale_count, cfg.kernel_mu_min, cfg.kernel_mu_max);
  const cplx eta = cplx(1.0, 1.0) * (coarse.dx / 3.0);
  const cplx eta_far = eta + cfg.kernel_separation;

  std::vector<ReportRow> rows;
  const cplx k_same = reproducing_kernel(eta, eta, cfg.wavelet, scales, coarse);
  const cplx k_far = reproducing_kernel(eta, eta_far, cfg.wavelet, scales, coarse);
  const double ratio = std::abs(k_far) / std::abs(k_same);
  rows.push_back(make_row("kernel_separated_ratio", k_far, k_same, ratio, cfg.kernel_ratio_tolerance,
                          ratio <= cfg.kernel_ratio_tolerance));

  const cplx k_fine = reproducing_kernel(eta, eta, cfg.wavelet, scales, fine);
  const double growth = std::abs(k_fine) / std::abs(k_same);
  rows.push_back(make_row("kernel_coincident_growth", k_fine, k_same, growth, cfg.kernel_growth_min,
                          growth >= cfg.kernel_growth_min));

  const cplx k_swap = reproducing_kernel(eta_far, eta, cfg.wavelet, scales, coarse);
  const double herm = std::abs(k_far - std::conj(k_swap));
  rows.push_back(make_row("kernel_hermitian", k_far, std::conj(k_swap), herm, 1e-12, herm <= 1e-12));
  return rows;
}

std::vector<ReportRow> constants_suite(const SuiteConfig& cfg) {
  std::vector<ReportRow> rows;
  const double c_prime = c_psi_prime(cfg.wavelet);
  if (cfg.wavelet.kind() == WaveletKind::Emhw) {
    const double e = std::abs(c_prime - 0.5);
    rows.push_back(make_row("c_psi_prime_emhw", c_prime, 0.5, e, 1e-3, e <= 1e-3));
  }
  const std::vector<StateDescriptor> states = {NumberStateSpec{0, 0}, NumberStateSpec{1, 1},
                                               CoherentStateSpec{{0.5, 0.0}, {0.3, 0.0}}};
  const std::vector<double> values = constant_scan(states, cfg.wavelet, cfg.scales(), cfg.grid(), cfg.engine);
  for (std::size_t k = 0; k < states.size(); ++k) {
    rows.push_back(closeness_row("isometry_" + to_string(states[k]), values[k], c_prime, cfg.theorem_tolerance));
  }
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double spread = *hi / *lo;
  rows.push_back(make_row("isometry_max_over_min", *hi, *lo, spread, 1.0 + cfg.theorem_tolerance,
                          spread <= 1.0 + cfg.theorem_tolerance));
  return rows;
}

std::vector<ReportRow> oracles_suite(const SuiteConfig& cfg) {
  std::vector<ReportRow> rows;
  std::mt19937 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> decay(0.5, 2.0);
  std::uniform_real_distribution<double> axis(0.3, 3.0);
  for (int k = 0; k < cfg.oracle_draws; ++k) {
    const cplx zeta(-decay(rng), unit(rng));
    const cplx xi(unit(rng), unit(rng));
    const cplx eta(unit(rng), unit(rng));
    const OracleCheck c = check_gaussian_integral(zeta, xi, eta);
    rows.push_back(make_row("gaussian_integral_" + std::to_string(k), c.quadrature, c.closed, c.error,
                            cfg.oracle_tolerance, c.error <= cfg.oracle_tolerance));
  }
  for (int k = 0; k < cfg.oracle_draws; ++k) {
    const double x = axis(rng);
    const double y = axis(rng);
    const OracleCheck c = check_scale_integral(x, y);
    rows.push_back(make_row("scale_integral_" + std::to_string(k), c.quadrature, c.closed, c.error,
                            cfg.oracle_tolerance, c.error <= cfg.oracle_tolerance));
  }
  // (-1)^n H_{n,n}(eta, eta*) = n! L_n(|eta|^2).
  std::uniform_real_distribution<double> radius(0.0, 3.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int n = 0; n <= 10; ++n) {
    double worst = 0.0;
    cplx worst_lhs = 0.0;
    cplx worst_rhs = 0.0;
    for (int k = 0; k < 20; ++k) {
      const cplx eta = std::polar(radius(rng), angle(rng));
      const cplx lhs = ((n % 2) ? -1.0 : 1.0) * hermite2(n, n, eta, std::conj(eta));
      const double rhs = factorial(n) * laguerre(n, std::norm(eta));
      const double e = std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
      if (e >= worst) {
        worst = e;
        worst_lhs = lhs;
        worst_rhs = rhs;
      }
    }
    rows.push_back(make_row("hermite_laguerre_n" + std::to_string(n), worst_lhs, worst_rhs, worst, 1e-10,
                            worst <= 1e-10));
  }
  return rows;
}

}  // namespace

bool is_known_suite(const std::string& name) {
  return name == "parseval" || name == "kernel" || name == "constants" || name == "oracles" || name == "all";
}

std::vector<ReportRow> run_suite(const std::string& name, const SuiteConfig& config) {
  if (name == "parseval") return parseval_suite(config);
  if (name == "kernel") return kernel_suite(config);
  if (name == "constants") return constants_suite(config);
  if (name == "oracles") return oracles_suite(config);
  if (name == "all") {
    std::vector<ReportRow> rows;
    for (const char* s : {"oracles", "constants", "parseval", "kernel"}) {
      std::vector<ReportRow> part = run_suite(s, config);
      rows.insert(rows.end(), part.begin(), part.end());
    }
    return rows;
  }
  throw PreconditionError("unknown suite '" + name + "'");
}

void write_report_csv(std::ostream& os, const std::vector<ReportRow>& rows) {
  os << "case,lhs_re,lhs_im,rhs_re,rhs_im,rel_error\n";
  os << std::setprecision(17);
  for (const ReportRow& r : rows) {
    os << r.name << ',' << r.lhs.real() << ',' << r.lhs.imag() << ',' << r.rhs.real() << ',' << r.rhs.imag() << ','
       << r.rel_error << '\n';
  }
}

std::string format_report_table(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  std::size_t width = 4;
  for (const ReportRow& r : rows) width = std::max(width, r.name.size());
  os << std::left << std::setw(static_cast<int>(width)) << "case" << "  " << std::setw(28) << "lhs" << std::setw(28)
     << "rhs" << std::setw(12) << "metric" << std::setw(12) << "tolerance" << "status\n";
  for (const ReportRow& r : rows) {
    std::ostringstream lhs, rhs;
    lhs << std::setprecision(8) << r.lhs.real() << (r.lhs.imag() < 0 ? "-" : "+") << std::abs(r.lhs.imag()) << "i";
    rhs << std::setprecision(8) << r.rhs.real() << (r.rhs.imag() < 0 ? "-" : "+") << std::abs(r.rhs.imag()) << "i";
    os << std::left << std::setw(static_cast<int>(width)) << r.name << "  " << std::setw(28) << lhs.str() + " "
       << std::setw(28) << rhs.str() + " " << std::setw(12) << std::setprecision(4) << r.rel_error << std::setw(12)
       << r.tolerance << (r.pass ? "pass" : "FAIL") << '\n';
  }
  return os.str();
}

}  // namespace entwave
