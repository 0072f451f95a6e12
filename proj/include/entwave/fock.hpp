#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "entwave/grid.hpp"
#include "entwave/wavelets.hpp"

namespace entwave {

// Highest number-state order handled by the eta-representation. The
// normalized Hermite recurrence stays in range well beyond this.
inline constexpr int kMaxFockOrder = 96;

// <eta|m,n> = exp(-|eta|^2/2) (-1)^n conj(H_{m,n}(eta, eta*)) / sqrt(m! n!).
cplx number_state_eta(int m, int n, cplx eta);

// <xi|m,n> = exp(-|xi|^2/2) conj(H_{m,n}(xi, xi*)) / sqrt(m! n!).
cplx number_state_xi(int m, int n, cplx xi);

// All <eta|m,n> for 0 <= m, n <= cutoff, row-major (cutoff + 1)^2.
std::vector<cplx> number_states_eta(int cutoff, cplx eta);

// Truncated two-mode state sum_{m,n <= N} c_{mn} |m,n>.
class TwoModeFockState {
 public:
  TwoModeFockState(int cutoff, std::vector<cplx> coeffs);

  static TwoModeFockState number(int m, int n);
  // Coherent |z1, z2>, truncated where the dropped norm is <= tail_tol^2.
  // Throws DivergentError when that needs more than kMaxFockOrder.
  static TwoModeFockState coherent(cplx z1, cplx z2, double tail_tol = 1e-10);

  int cutoff() const { return cutoff_; }
  cplx coeff(int m, int n) const { return coeffs_[static_cast<std::size_t>(m) * (cutoff_ + 1) + n]; }
  double norm_squared() const;

  // <eta|state>.
  cplx eta_value(cplx eta) const;

 private:
  int cutoff_;
  std::vector<cplx> coeffs_;
};

// <eta|z1,z2> by the number-state series with adaptive truncation.
cplx coherent_state_eta(cplx z1, cplx z2, cplx eta);

// <xi|eta> = (1/2) exp[i (xi1 eta2 - xi2 eta1)].
cplx xi_eta_overlap(cplx xi, cplx eta);

// sum_{m,n <= cutoff} <xi|m,n><m,n|eta>.
cplx xi_eta_resummation(cplx xi, cplx eta, int cutoff);

// <psi|U2(mu, kappa)|g> = (1/mu) int d^2 eta / pi psi*((eta - kappa)/mu) g(eta),
// the same quadrature as the forward transform.
cplx u2_matrix_element(const MotherWavelet& w, const Field& g, double mu, cplx kappa);

// Dense (dim x dim) complex matrix, row-major.
struct ComplexMatrix {
  int dim = 0;
  std::vector<cplx> data;
  cplx operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * dim + c]; }
  cplx& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * dim + c]; }
};

// G_{(mn),(m'n')} = int d^2 eta / pi <m,n|eta><eta|m',n'> by quadrature;
// state (m, n) has index m * (cutoff + 1) + n.
ComplexMatrix completeness_gram(int cutoff, const ComplexPlaneGrid& grid);

double max_deviation_from_identity(const ComplexMatrix& g);

// "number:m,n" or "coherent:re1,im1,re2,im2".
struct NumberStateSpec {
  int m = 0;
  int n = 0;
};
struct CoherentStateSpec {
  cplx z1;
  cplx z2;
};
using StateDescriptor = std::variant<NumberStateSpec, CoherentStateSpec>;

StateDescriptor parse_state_descriptor(const std::string& text);
std::string to_string(const StateDescriptor& d);
TwoModeFockState resolve_state(const StateDescriptor& d);

// The eta-representation of the state sampled on the grid.
Field sample_state(const StateDescriptor& d, const ComplexPlaneGrid& grid);

}  // namespace entwave
