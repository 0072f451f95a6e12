#pragma once

#include <complex>
#include <vector>

namespace entwave {

using cplx = std::complex<double>;

// Largest polynomial order accepted by hermite2/laguerre. Intermediate
// factorial products beyond this leave double-precision range.
inline constexpr int kMaxPolyOrder = 32;

// Two-variable Hermite polynomial H_{m,n}(x, y), generated by
// exp(-t t' + t x + t' y). Evaluated by the closed finite sum
//   sum_k (-1)^k m! n! x^{m-k} y^{n-k} / (k! (m-k)! (n-k)!).
// Throws PreconditionError for negative orders or orders above kMaxPolyOrder.
cplx hermite2(int m, int n, cplx x, cplx y);

// Laguerre polynomial L_n(x) by the three-term recurrence.
double laguerre(int n, double x);

// Table of H_{m,n}(x, y) / sqrt(m! n!) for 0 <= m, n <= order, stored
// row-major as (order + 1) x (order + 1). Built by the recurrence
// H_{m+1,n} = x H_{m,n} - n H_{m,n-1}, which stays in range for orders well
// past kMaxPolyOrder.
std::vector<cplx> hermite2_normalized_table(int order, cplx x, cplx y);

// n! as a double (exact up to 22!).
double factorial(int n);

}  // namespace entwave
