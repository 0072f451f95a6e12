#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace entwave {

using cplx = std::complex<double>;

// Uniform rectangular sampling of the complex plane. Node (i, j) sits at
// (x_min + i dx) + i (y_min + j dy); i runs along the real axis.
struct ComplexPlaneGrid {
  int nx = 0;
  int ny = 0;
  double x_min = 0.0;
  double y_min = 0.0;
  double dx = 0.0;
  double dy = 0.0;

  // n x n nodes covering |Re|, |Im| <= extent, symmetric about the origin.
  static ComplexPlaneGrid symmetric(int n, double extent);

  cplx node(int i, int j) const { return {x_min + i * dx, y_min + j * dy}; }
  std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * ny + j; }
  double cell_area() const { return dx * dy; }
  double x_max() const { return x_min + (nx - 1) * dx; }
  double y_max() const { return y_min + (ny - 1) * dy; }

  // Throws PreconditionError unless nx, ny >= 1 and dx, dy > 0.
  void validate() const;

  bool operator==(const ComplexPlaneGrid&) const = default;
};

// True when both grids share spacing and every node of one lies on the
// lattice of the other (offsets are integer multiples of the spacing).
bool lattice_aligned(const ComplexPlaneGrid& a, const ComplexPlaneGrid& b);

// Integer lattice offset (b.x_min - a.x_min) / dx, (b.y_min - a.y_min) / dy
// for aligned grids.
std::pair<long, long> lattice_offset(const ComplexPlaneGrid& a, const ComplexPlaneGrid& b);

// Complex samples on a ComplexPlaneGrid, row-major (index = i * ny + j).
class Field {
 public:
  Field() = default;
  explicit Field(ComplexPlaneGrid grid);
  Field(ComplexPlaneGrid grid, std::vector<cplx> values);

  const ComplexPlaneGrid& grid() const { return grid_; }
  std::span<const cplx> values() const { return values_; }
  std::span<cplx> values() { return values_; }

  cplx operator()(int i, int j) const { return values_[grid_.index(i, j)]; }
  cplx& operator()(int i, int j) { return values_[grid_.index(i, j)]; }

  // Largest |value| over the outermost ring of nodes.
  double boundary_max() const;
  double max_abs() const;

  Field& operator*=(cplx a);
  friend Field operator*(cplx a, Field f) { return f *= a; }

 private:
  ComplexPlaneGrid grid_;
  std::vector<cplx> values_;
};

// Evaluate f at every node. Throws PreconditionError on a non-finite value.
Field sample(const std::function<cplx(cplx)>& f, const ComplexPlaneGrid& grid);

enum class Measure { Plain, D2OverPi, D2Over2Pi };

// Trapezoidal 2D quadrature of the field, divided by 1, pi or 2 pi.
cplx integrate(const Field& field, Measure measure);

// Trapezoid weight (1 or 1/2) along one axis.
inline double trapezoid_weight(int k, int n) {
  return (n > 1 && (k == 0 || k == n - 1)) ? 0.5 : 1.0;
}

// Log-spaced dilation values mu_0 < ... < mu_{n-1}.
class ScaleGrid {
 public:
  ScaleGrid() = default;
  static ScaleGrid log_spaced(int count, double mu_min, double mu_max);
  static ScaleGrid single(double mu);
  // Takes explicit values; they must be positive, strictly increasing and
  // have a constant ratio to 1e-12.
  static ScaleGrid from_values(std::vector<double> mu);

  std::span<const double> values() const { return mu_; }
  std::size_t size() const { return mu_.size(); }
  bool empty() const { return mu_.empty(); }
  double mu_min() const { return mu_.front(); }
  double mu_max() const { return mu_.back(); }
  double operator[](std::size_t k) const { return mu_[k]; }

  // Same node count over [mu_min / 2, 2 mu_max].
  ScaleGrid doubled_range() const;

 private:
  std::vector<double> mu_;
};

// Trapezoid weights in log mu such that
//   sum_k w_k f(mu_k) ~ int_{mu_min}^{mu_max} dmu / mu^p f(mu).
// p must be 1, 2, 3, 4 or 5.
std::vector<double> scale_weights(const ScaleGrid& scales, int power);

// Defaults used when no configuration is supplied.
inline constexpr int kDefaultGridN = 256;
inline constexpr double kDefaultGridExtent = 8.0;
inline constexpr int kDefaultScaleCount = 64;
inline constexpr double kDefaultMuMin = 0.25;
inline constexpr double kDefaultMuMax = 4.0;

ComplexPlaneGrid default_grid();
ScaleGrid default_scales();

}  // namespace entwave
