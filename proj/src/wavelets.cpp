#include "entwave/wavelets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "entwave/error.hpp"
#include "entwave/specfun.hpp"

namespace entwave {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw PreconditionError("bad coefficient '" + item + "'");
    }
    if (used != item.size()) throw PreconditionError("bad coefficient '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::string to_string(WaveletKind kind) {
  switch (kind) {
    case WaveletKind::LaguerreGaussian:
      return "lg";
    case WaveletKind::Emhw:
      return "emhw";
    case WaveletKind::MexicanHat1D:
      return "mexhat1d";
  }
  return "unknown";
}

MotherWavelet::MotherWavelet(WaveletKind kind, std::vector<double> coeffs)
    : kind_(kind), coeffs_(std::move(coeffs)) {
  if (kind_ != WaveletKind::MexicanHat1D) {
    if (coeffs_.empty()) throw PreconditionError("Laguerre-Gaussian wavelet needs at least one coefficient");
    if (static_cast<int>(coeffs_.size()) > kMaxPolyOrder + 1) {
      throw PreconditionError("too many Laguerre coefficients (max " + std::to_string(kMaxPolyOrder + 1) + ")");
    }
  }
  laguerre_weights_.resize(coeffs_.size());
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!std::isfinite(coeffs_[n])) throw PreconditionError("non-finite wavelet coefficient");
    laguerre_weights_[n] = factorial(static_cast<int>(n)) * coeffs_[n];
  }
}

MotherWavelet MotherWavelet::laguerre_gaussian(std::vector<double> coeffs) {
  return MotherWavelet(WaveletKind::LaguerreGaussian, std::move(coeffs));
}

MotherWavelet MotherWavelet::laguerre_gaussian_unit_energy(std::vector<double> coeffs) {
  const MotherWavelet raw = laguerre_gaussian(std::move(coeffs));
  const double e = wavelet_energy(raw);
  if (!(e > 0.0)) throw PreconditionError("cannot normalize a zero wavelet");
  return raw.scaled(1.0 / std::sqrt(e));
}

MotherWavelet MotherWavelet::emhw() { return MotherWavelet(WaveletKind::Emhw, {0.5, 0.5}); }

MotherWavelet MotherWavelet::mexican_hat_1d() { return MotherWavelet(WaveletKind::MexicanHat1D, {}); }

MotherWavelet MotherWavelet::scaled(double a) const {
  std::vector<double> c = coeffs_;
  for (double& v : c) v *= a;
  // A rescaled Emhw is no longer the named member.
  const WaveletKind k = (kind_ == WaveletKind::Emhw && a != 1.0) ? WaveletKind::LaguerreGaussian : kind_;
  if (kind_ == WaveletKind::MexicanHat1D && a != 1.0) {
    throw PreconditionError("the 1D Mexican hat has no coefficient form to rescale");
  }
  return MotherWavelet(k, std::move(c));
}

double MotherWavelet::radial(double t) const {
  switch (kind_) {
    case WaveletKind::Emhw:
      return std::exp(-0.5 * t) * (1.0 - 0.5 * t);
    case WaveletKind::MexicanHat1D:
      return std::exp(-0.5 * t) * (1.0 - t);
    case WaveletKind::LaguerreGaussian:
      break;
  }
  double prev = 1.0;
  double cur = 1.0 - t;
  double sum = laguerre_weights_[0];
  for (std::size_t n = 1; n < laguerre_weights_.size(); ++n) {
    sum += laguerre_weights_[n] * cur;
    const double k = static_cast<double>(n);
    const double next = ((2.0 * k + 1.0 - t) * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return std::exp(-0.5 * t) * sum;
}

std::string MotherWavelet::descriptor() const {
  std::ostringstream os;
  os.precision(17);
  os << "kind=" << to_string(kind_) << "\n";
  if (kind_ == WaveletKind::LaguerreGaussian) {
    os << "coeffs=";
    for (std::size_t n = 0; n < coeffs_.size(); ++n) os << (n ? "," : "") << coeffs_[n];
    os << "\n";
  }
  return os.str();
}

MotherWavelet parse_wavelet_descriptor(const std::string& text) {
  std::string kind;
  std::string coeffs;
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ';', '\n');
  std::istringstream in(normalized);
  std::string token;
  while (in >> token) {
    if (token.empty() || token[0] == '#') continue;
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw PreconditionError("wavelet descriptor: expected key=value, got '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "kind") {
      kind = value;
    } else if (key == "coeffs") {
      coeffs = value;
    } else {
      throw PreconditionError("wavelet descriptor: unknown key '" + key + "'");
    }
  }
  if (kind == "emhw") return MotherWavelet::emhw();
  if (kind == "mexhat1d" || kind == "mexican-hat-1d") return MotherWavelet::mexican_hat_1d();
  if (kind == "lg" || kind == "laguerre-gaussian") {
    std::vector<double> c = parse_list(coeffs);
    if (c.empty()) throw PreconditionError("wavelet descriptor: kind=lg needs coeffs");
    return MotherWavelet::laguerre_gaussian(std::move(c));
  }
  throw PreconditionError("wavelet descriptor: unknown kind '" + kind + "'");
}

cplx eval_wavelet(const MotherWavelet& w, cplx eta) {
  if (w.kind() == WaveletKind::MexicanHat1D) return w.radial(eta.real() * eta.real());
  return w.radial(std::norm(eta));
}

Field symplectic_fourier(const Field& samples, const ComplexPlaneGrid& xi_grid) {
  xi_grid.validate();
  const ComplexPlaneGrid& g = samples.grid();
  if (samples.boundary_max() > kFourierDecayThreshold) {
    throw PreconditionError("symplectic_fourier: samples do not decay at the grid boundary (aliasing risk)");
  }

  // Kernel exp[i(xi1 eta2 - xi2 eta1)] factors into an eta2 sum and an eta1 sum.
  const int na = xi_grid.nx;
  const int nb = xi_grid.ny;
  std::vector<cplx> partial(static_cast<std::size_t>(g.nx) * na);  // [i][a]
  std::vector<cplx> phase_y(static_cast<std::size_t>(g.ny));
  for (int a = 0; a < na; ++a) {
    const double xi1 = xi_grid.x_min + a * xi_grid.dx;
    for (int j = 0; j < g.ny; ++j) {
      const double eta2 = g.y_min + j * g.dy;
      phase_y[j] = trapezoid_weight(j, g.ny) * std::polar(1.0, xi1 * eta2);
    }
    for (int i = 0; i < g.nx; ++i) {
      cplx s = 0.0;
      for (int j = 0; j < g.ny; ++j) s += samples(i, j) * phase_y[j];
      partial[static_cast<std::size_t>(i) * na + a] = s;
    }
  }

  Field out(xi_grid);
  const double scale = g.cell_area() / (2.0 * kPi);
  std::vector<cplx> phase_x(static_cast<std::size_t>(g.nx));
  for (int b = 0; b < nb; ++b) {
    const double xi2 = xi_grid.y_min + b * xi_grid.dy;
    for (int i = 0; i < g.nx; ++i) {
      const double eta1 = g.x_min + i * g.dx;
      phase_x[i] = trapezoid_weight(i, g.nx) * std::polar(1.0, -xi2 * eta1);
    }
    for (int a = 0; a < na; ++a) {
      cplx s = 0.0;
      for (int i = 0; i < g.nx; ++i) s += phase_x[i] * partial[static_cast<std::size_t>(i) * na + a];
      out(a, b) = scale * s;
    }
  }
  return out;
}

cplx fourier_closed(const MotherWavelet& w, cplx xi) {
  const double r2 = std::norm(xi);
  switch (w.kind()) {
    case WaveletKind::Emhw:
      return 0.5 * r2 * std::exp(-0.5 * r2);
    case WaveletKind::LaguerreGaussian: {
      const double r = std::sqrt(r2);
      cplx sum = 0.0;
      const auto k = w.coeffs();
      for (std::size_t n = 0; n < k.size(); ++n) {
        const int order = static_cast<int>(n);
        sum += k[n] * hermite2(order, order, r, r);
      }
      return std::exp(-0.5 * r2) * sum;
    }
    case WaveletKind::MexicanHat1D:
      break;
  }
  throw PreconditionError("fourier_closed: unsupported wavelet kind " + to_string(w.kind()));
}

double fourier_1d(const MotherWavelet& w, double p) {
  if (w.kind() != WaveletKind::MexicanHat1D) {
    throw PreconditionError("fourier_1d: only defined for the 1D Mexican hat");
  }
  return std::sqrt(2.0 * kPi) * p * p * std::exp(-0.5 * p * p);
}

cplx admissibility_defect(const MotherWavelet& w) {
  if (w.kind() == WaveletKind::MexicanHat1D) return 0.0;
  const auto k = w.coeffs();
  double s = 0.0;
  for (std::size_t n = 0; n < k.size(); ++n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    s += sign * factorial(static_cast<int>(n)) * k[n];
  }
  return s;
}

cplx admissibility_defect(const Field& samples) { return integrate(samples, Measure::D2Over2Pi); }

double wavelet_energy(const MotherWavelet& w) {
  if (w.kind() == WaveletKind::MexicanHat1D) {
    throw PreconditionError("wavelet_energy: the 1D Mexican hat is not a plane wavelet");
  }
  // int_0^inf e^{-t} L_m L_n dt = delta_mn.
  double e = 0.0;
  const auto k = w.coeffs();
  for (std::size_t n = 0; n < k.size(); ++n) {
    const double a = factorial(static_cast<int>(n)) * k[n];
    e += a * a;
  }
  return e;
}

double c_psi_prime(const MotherWavelet& w) {
  if (w.kind() == WaveletKind::MexicanHat1D) {
    throw PreconditionError("c_psi_prime: needs a plane wavelet");
  }
  const double defect = std::abs(admissibility_defect(w));
  if (defect > kAdmissibilityQuadratureTolerance) {
    throw NonAdmissibleError("wavelet is not admissible (defect " + std::to_string(defect) + ")", defect);
  }

  constexpr double r_min = 1e-6;
  constexpr double r_max = 12.0;
  const double u0 = std::log(r_min);
  const double u1 = std::log(r_max);
  // In u = ln r the integrand is 4 |psi(e^u)|^2.
  auto f = [&](double u) { return 4.0 * std::norm(fourier_closed(w, std::exp(u))); };

  const double f0 = f(u0);
  const double f1 = f(u1);
  int n = 64;
  double h = (u1 - u0) / n;
  double t = 0.5 * (f0 + f1);
  for (int k = 1; k < n; ++k) t += f(u0 + k * h);
  double trap = t * h;
  double prev_rich = trap;
  for (int level = 0; level < 16; ++level) {
    // Add midpoints.
    double mids = 0.0;
    for (int k = 0; k < n; ++k) mids += f(u0 + (k + 0.5) * h);
    t += mids;
    n *= 2;
    h *= 0.5;
    const double refined = t * h;
    const double rich = refined + (refined - trap) / 3.0;
    trap = refined;
    if (level > 0 && std::abs(rich - prev_rich) <= 1e-12 * std::abs(rich) + 1e-300) {
      // The truncated ends must hold a negligible share of the integral.
      const double edge = std::max(f0, f1);
      if (edge > 1e-10 * std::abs(rich)) {
        throw DivergentError("c_psi_prime: integrand has not decayed at the ends of [1e-6, 12]");
      }
      return rich;
    }
    prev_rich = rich;
  }
  throw DivergentError("c_psi_prime: radial quadrature did not converge under refinement");
}

RadialProfile RadialProfile::sample(const std::function<double(double)>& f, double start, double spacing,
                                    int count) {
  RadialProfile p{start, spacing, {}};
  p.values.reserve(count);
  for (int k = 0; k < count; ++k) p.values.push_back(f(start + k * spacing));
  p.validate();
  return p;
}

void RadialProfile::validate() const {
  if (!(start > 0.0)) throw PreconditionError("radial profile must start above 0");
  if (!(spacing > 0.0)) throw PreconditionError("radial profile spacing must be positive");
  if (values.empty()) throw PreconditionError("radial profile is empty");
  for (double v : values) {
    if (!std::isfinite(v)) throw PreconditionError("radial profile has a non-finite sample");
  }
}

double c_psi_1d(const RadialProfile& psi_hat) {
  psi_hat.validate();
  const auto& v = psi_hat.values;
  double peak = 0.0;
  for (double x : v) peak = std::max(peak, x * x);
  if (peak == 0.0) return 0.0;
  if (v.front() * v.front() > 1e-6 * peak || v.back() * v.back() > 1e-6 * peak) {
    throw DivergentError("c_psi_1d: profile does not decay at both ends");
  }
  const int n = static_cast<int>(v.size());
  double sum = 0.0;
  for (int k = 0; k < n; ++k) sum += trapezoid_weight(k, n) * v[k] * v[k] / psi_hat.radius(k);
  return sum * psi_hat.spacing;
}

}  // namespace entwave
