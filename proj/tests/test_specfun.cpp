#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "entwave/error.hpp"
#include "entwave/specfun.hpp"

using namespace entwave;

namespace {

// H_{m,n} from the generating-function recurrences
//   H_{m+1,n} = x H_{m,n} - n H_{m,n-1},  H_{0,n} = y^n.
cplx hermite_by_recurrence(int m, int n, cplx x, cplx y) {
  std::vector<std::vector<cplx>> h(m + 1, std::vector<cplx>(n + 1));
  for (int j = 0; j <= n; ++j) h[0][j] = std::pow(y, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) h[i + 1][j] = x * h[i][j] - (j > 0 ? double(j) * h[i][j - 1] : 0.0);
  return h[m][n];
}

// L_n(x) = sum_k (-1)^k C(n, k) x^k / k!, accumulated in long double.
double laguerre_by_series(int n, double x) {
  long double sum = 0.0L;
  long double binom = 1.0L;
  long double term_pow = 1.0L;
  long double kfact = 1.0L;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      binom = binom * (n - k + 1) / k;
      term_pow *= x;
      kfact *= k;
    }
    sum += ((k % 2) ? -1.0L : 1.0L) * binom * term_pow / kfact;
  }
  return static_cast<double>(sum);
}

}  // namespace

TEST(Hermite2, LowOrders) {
  EXPECT_EQ(hermite2(0, 0, {0.3, 0.1}, {-2.0, 1.0}), cplx(1.0));
  EXPECT_NEAR(std::abs(hermite2(1, 1, 2.0, 3.0) - 5.0), 0.0, 1e-14);
  const cplx x(0.7, -0.2), y(-1.1, 0.4);
  const cplx expected = x * x * y * y - 4.0 * x * y + 2.0;
  EXPECT_NEAR(std::abs(hermite2(2, 2, x, y) - expected), 0.0, 1e-13);
}

TEST(Hermite2, MatchesRecurrence) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int m = 0; m <= 8; ++m) {
    for (int n = 0; n <= 8; ++n) {
      const cplx x(u(rng), u(rng)), y(u(rng), u(rng));
      const cplx a = hermite2(m, n, x, y);
      const cplx b = hermite_by_recurrence(m, n, x, y);
      EXPECT_LE(std::abs(a - b), 1e-11 * std::max(1.0, std::abs(b))) << m << "," << n;
    }
  }
}

TEST(Hermite2, OrderCutoff) {
  EXPECT_NO_THROW(hermite2(kMaxPolyOrder, 0, 0.1, 0.1));
  EXPECT_THROW(hermite2(kMaxPolyOrder + 1, 0, 0.1, 0.1), PreconditionError);
  EXPECT_THROW(hermite2(-1, 0, 0.1, 0.1), PreconditionError);
}

TEST(Laguerre, MatchesSeries) {
  EXPECT_DOUBLE_EQ(laguerre(0, 3.7), 1.0);
  EXPECT_NEAR(laguerre(1, 0.25), 0.75, 1e-15);
  for (int n = 0; n <= 20; ++n)
    for (double x : {0.0, 0.3, 1.0, 2.5, 6.0})
      EXPECT_NEAR(laguerre(n, x), laguerre_by_series(n, x), 1e-10 * std::max(1.0, std::abs(laguerre_by_series(n, x))));
  EXPECT_THROW(laguerre(kMaxPolyOrder + 1, 1.0), PreconditionError);
}

TEST(Hermite2, DiagonalLaguerreIdentity) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> r(0.0, 3.0), a(0.0, 6.283185307179586);
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k < 20; ++k) {
      const cplx eta = std::polar(r(rng), a(rng));
      const cplx lhs = ((n % 2) ? -1.0 : 1.0) * hermite2(n, n, eta, std::conj(eta));
      const double rhs = factorial(n) * laguerre_by_series(n, std::norm(eta));
      EXPECT_LE(std::abs(lhs - rhs), 1e-10 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST(Hermite2, NormalizedTable) {
  const cplx x(0.4, 0.9), y = std::conj(x);
  const int order = 6;
  const std::vector<cplx> t = hermite2_normalized_table(order, x, y);
  ASSERT_EQ(t.size(), std::size_t((order + 1) * (order + 1)));
  for (int m = 0; m <= order; ++m)
    for (int n = 0; n <= order; ++n) {
      const cplx expected = hermite_by_recurrence(m, n, x, y) / std::sqrt(factorial(m) * factorial(n));
      EXPECT_LE(std::abs(t[m * (order + 1) + n] - expected), 1e-12);
    }
}
