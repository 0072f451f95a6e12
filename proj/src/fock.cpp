#include "entwave/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "entwave/ccwt.hpp"
#include "entwave/error.hpp"
#include "entwave/specfun.hpp"

namespace entwave {

namespace {

void check_fock_order(int k) {
  if (k < 0 || k > kMaxFockOrder) {
    throw PreconditionError("number-state order " + std::to_string(k) + " outside [0, " +
                            std::to_string(kMaxFockOrder) + "]");
  }
}

// Sum_{m > n} e^{-lambda} lambda^m / m!, summed term by term.
double poisson_tail(double lambda, int n) {
  if (lambda == 0.0) return 0.0;
  double term = std::exp(-lambda);
  for (int m = 1; m <= n; ++m) term *= lambda / m;
  double tail = 0.0;
  for (int m = n + 1; m < n + 400; ++m) {
    term *= lambda / m;
    tail += term;
    if (term < 1e-30 * tail && m > lambda) break;
  }
  return tail;
}

std::vector<double> parse_numbers(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stod(item, &used));
    } catch (const std::exception&) {
      throw PreconditionError("bad " + what + " descriptor value '" + item + "'");
    }
    if (used != item.size()) throw PreconditionError("bad " + what + " descriptor value '" + item + "'");
  }
  return out;
}

}  // namespace

std::vector<cplx> number_states_eta(int cutoff, cplx eta) {
  check_fock_order(cutoff);
  std::vector<cplx> h = hermite2_normalized_table(cutoff, eta, std::conj(eta));
  const double envelope = std::exp(-0.5 * std::norm(eta));
  const int w = cutoff + 1;
  for (int m = 0; m <= cutoff; ++m) {
    for (int n = 0; n <= cutoff; ++n) {
      cplx& v = h[static_cast<std::size_t>(m) * w + n];
      v = ((n % 2 == 0) ? envelope : -envelope) * std::conj(v);
    }
  }
  return h;
}

cplx number_state_eta(int m, int n, cplx eta) {
  check_fock_order(m);
  check_fock_order(n);
  const int order = std::max(m, n);
  const std::vector<cplx> h = number_states_eta(order, eta);
  return h[static_cast<std::size_t>(m) * (order + 1) + n];
}

cplx number_state_xi(int m, int n, cplx xi) {
  check_fock_order(m);
  check_fock_order(n);
  const int order = std::max(m, n);
  const std::vector<cplx> h = hermite2_normalized_table(order, xi, std::conj(xi));
  return std::exp(-0.5 * std::norm(xi)) * std::conj(h[static_cast<std::size_t>(m) * (order + 1) + n]);
}

TwoModeFockState::TwoModeFockState(int cutoff, std::vector<cplx> coeffs) : cutoff_(cutoff), coeffs_(std::move(coeffs)) {
  check_fock_order(cutoff_);
  const std::size_t w = static_cast<std::size_t>(cutoff_) + 1;
  if (coeffs_.size() != w * w) throw PreconditionError("Fock coefficient matrix has the wrong size");
  for (const cplx& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw PreconditionError("non-finite Fock coefficient");
    }
  }
  if (norm_squared() > 1.0 + 1e-9) throw PreconditionError("Fock state norm exceeds 1");
}

TwoModeFockState TwoModeFockState::number(int m, int n) {
  check_fock_order(m);
  check_fock_order(n);
  const int cutoff = std::max(m, n);
  std::vector<cplx> c(static_cast<std::size_t>(cutoff + 1) * (cutoff + 1), 0.0);
  c[static_cast<std::size_t>(m) * (cutoff + 1) + n] = 1.0;
  return TwoModeFockState(cutoff, std::move(c));
}

TwoModeFockState TwoModeFockState::coherent(cplx z1, cplx z2, double tail_tol) {
  const double l1 = std::norm(z1);
  const double l2 = std::norm(z2);
  int cutoff = 0;
  while (poisson_tail(l1, cutoff) + poisson_tail(l2, cutoff) > tail_tol * tail_tol) {
    if (++cutoff > kMaxFockOrder) {
      throw DivergentError("coherent-state series needs more than " + std::to_string(kMaxFockOrder) + " quanta");
    }
  }
  const int w = cutoff + 1;
  std::vector<cplx> a(w), b(w);
  a[0] = std::exp(-0.5 * l1);
  b[0] = std::exp(-0.5 * l2);
  for (int k = 1; k < w; ++k) {
    a[k] = a[k - 1] * z1 / std::sqrt(double(k));
    b[k] = b[k - 1] * z2 / std::sqrt(double(k));
  }
  std::vector<cplx> c(static_cast<std::size_t>(w) * w);
  for (int m = 0; m < w; ++m) {
    for (int n = 0; n < w; ++n) c[static_cast<std::size_t>(m) * w + n] = a[m] * b[n];
  }
  return TwoModeFockState(cutoff, std::move(c));
}

double TwoModeFockState::norm_squared() const {
  double s = 0.0;
  for (const cplx& c : coeffs_) s += std::norm(c);
  return s;
}

cplx TwoModeFockState::eta_value(cplx eta) const {
  const std::vector<cplx> basis = number_states_eta(cutoff_, eta);
  cplx s = 0.0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs_[k] != 0.0) s += coeffs_[k] * basis[k];
  }
  return s;
}

cplx coherent_state_eta(cplx z1, cplx z2, cplx eta) { return TwoModeFockState::coherent(z1, z2).eta_value(eta); }

cplx xi_eta_overlap(cplx xi, cplx eta) {
  return 0.5 * std::polar(1.0, xi.real() * eta.imag() - xi.imag() * eta.real());
}

cplx xi_eta_resummation(cplx xi, cplx eta, int cutoff) {
  check_fock_order(cutoff);
  const std::vector<cplx> hx = hermite2_normalized_table(cutoff, xi, std::conj(xi));
  const std::vector<cplx> eta_basis = number_states_eta(cutoff, eta);
  const double env_xi = std::exp(-0.5 * std::norm(xi));
  cplx s = 0.0;
  for (std::size_t k = 0; k < hx.size(); ++k) {
    // <xi|m,n> <m,n|eta>
    s += env_xi * std::conj(hx[k]) * std::conj(eta_basis[k]);
  }
  return s;
}

cplx u2_matrix_element(const MotherWavelet& w, const Field& g, double mu, cplx kappa) {
  return coefficient_at(g, w, mu, kappa);
}

ComplexMatrix completeness_gram(int cutoff, const ComplexPlaneGrid& grid) {
  check_fock_order(cutoff);
  grid.validate();
  const int dim = (cutoff + 1) * (cutoff + 1);
  ComplexMatrix g{dim, std::vector<cplx>(static_cast<std::size_t>(dim) * dim, 0.0)};
  for (int i = 0; i < grid.nx; ++i) {
    const double wi = trapezoid_weight(i, grid.nx);
    for (int j = 0; j < grid.ny; ++j) {
      const double wt = wi * trapezoid_weight(j, grid.ny);
      const std::vector<cplx> v = number_states_eta(cutoff, grid.node(i, j));
      for (int r = 0; r < dim; ++r) {
        const cplx left = wt * std::conj(v[r]);
        if (left == 0.0) continue;
        for (int c = 0; c < dim; ++c) g(r, c) += left * v[c];
      }
    }
  }
  const double scale = grid.cell_area() / std::numbers::pi;
  for (cplx& x : g.data) x *= scale;
  return g;
}

double max_deviation_from_identity(const ComplexMatrix& g) {
  double worst = 0.0;
  for (int r = 0; r < g.dim; ++r) {
    for (int c = 0; c < g.dim; ++c) worst = std::max(worst, std::abs(g(r, c) - (r == c ? 1.0 : 0.0)));
  }
  return worst;
}

StateDescriptor parse_state_descriptor(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw PreconditionError("state descriptor '" + text + "' lacks a ':'");
  const std::string kind = text.substr(0, colon);
  const std::vector<double> v = parse_numbers(text.substr(colon + 1), kind);
  if (kind == "number") {
    if (v.size() != 2 || v[0] != std::floor(v[0]) || v[1] != std::floor(v[1])) {
      throw PreconditionError("number state needs two integers: number:m,n");
    }
    NumberStateSpec s{static_cast<int>(v[0]), static_cast<int>(v[1])};
    check_fock_order(s.m);
    check_fock_order(s.n);
    return s;
  }
  if (kind == "coherent") {
    if (v.size() != 4) throw PreconditionError("coherent state needs coherent:re1,im1,re2,im2");
    return CoherentStateSpec{{v[0], v[1]}, {v[2], v[3]}};
  }
  throw PreconditionError("unknown state kind '" + kind + "'");
}

std::string to_string(const StateDescriptor& d) {
  std::ostringstream os;
  if (const auto* n = std::get_if<NumberStateSpec>(&d)) {
    os << "number:" << n->m << "," << n->n;
  } else {
    const auto& c = std::get<CoherentStateSpec>(d);
    os << "coherent:" << c.z1.real() << "," << c.z1.imag() << "," << c.z2.real() << "," << c.z2.imag();
  }
  return os.str();
}

TwoModeFockState resolve_state(const StateDescriptor& d) {
  if (const auto* n = std::get_if<NumberStateSpec>(&d)) return TwoModeFockState::number(n->m, n->n);
  const auto& c = std::get<CoherentStateSpec>(d);
  return TwoModeFockState::coherent(c.z1, c.z2);
}

Field sample_state(const StateDescriptor& d, const ComplexPlaneGrid& grid) {
  const TwoModeFockState state = resolve_state(d);
  return sample([&](cplx eta) { return state.eta_value(eta); }, grid);
}

}  // namespace entwave
