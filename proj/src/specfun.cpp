#include "entwave/specfun.hpp"

#include <cmath>
#include <string>

#include "entwave/error.hpp"

namespace entwave {

namespace {

void check_order(int k, const char* what) {
  if (k < 0 || k > kMaxPolyOrder) {
    throw PreconditionError(std::string(what) + ": order " + std::to_string(k) +
                            " outside [0, " + std::to_string(kMaxPolyOrder) + "]");
  }
}

}  // namespace

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

cplx hermite2(int m, int n, cplx x, cplx y) {
  check_order(m, "hermite2");
  check_order(n, "hermite2");

  std::vector<cplx> xp(m + 1), yp(n + 1);
  xp[0] = yp[0] = 1.0;
  for (int k = 1; k <= m; ++k) xp[k] = xp[k - 1] * x;
  for (int k = 1; k <= n; ++k) yp[k] = yp[k - 1] * y;

  // c_k = m! n! / (k! (m-k)! (n-k)!), advanced by ratio so small orders stay
  // exact integers.
  const int kmax = std::min(m, n);
  double c = 1.0;
  cplx sum = 0.0;
  for (int k = 0; k <= kmax; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * c * xp[m - k] * yp[n - k];
    c *= static_cast<double>(m - k) * static_cast<double>(n - k) / (k + 1);
  }
  return sum;
}

double laguerre(int n, double x) {
  check_order(n, "laguerre");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<cplx> hermite2_normalized_table(int order, cplx x, cplx y) {
  if (order < 0) throw PreconditionError("hermite2_normalized_table: negative order");
  const int w = order + 1;
  std::vector<cplx> h(static_cast<size_t>(w) * w);
  auto at = [&](int m, int n) -> cplx& { return h[static_cast<size_t>(m) * w + n]; };

  at(0, 0) = 1.0;
  for (int n = 1; n <= order; ++n) at(0, n) = y * at(0, n - 1) / std::sqrt(double(n));
  for (int m = 0; m < order; ++m) {
    const double inv = 1.0 / std::sqrt(double(m + 1));
    at(m + 1, 0) = x * at(m, 0) * inv;
    for (int n = 1; n <= order; ++n) {
      at(m + 1, n) = (x * at(m, n) - std::sqrt(double(n)) * at(m, n - 1)) * inv;
    }
  }
  return h;
}

}  // namespace entwave
