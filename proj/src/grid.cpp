#include "entwave/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "entwave/error.hpp"

namespace entwave {

ComplexPlaneGrid ComplexPlaneGrid::symmetric(int n, double extent) {
  if (n < 2 || !(extent > 0.0)) {
    throw PreconditionError("symmetric grid needs n >= 2 and extent > 0");
  }
  const double d = 2.0 * extent / (n - 1);
  ComplexPlaneGrid g{n, n, -extent, -extent, d, d};
  return g;
}

void ComplexPlaneGrid::validate() const {
  if (nx < 1 || ny < 1) throw PreconditionError("grid needs at least one node per axis");
  if (!(dx > 0.0) || !(dy > 0.0)) throw PreconditionError("grid spacing must be positive");
  if (!std::isfinite(x_min) || !std::isfinite(y_min)) {
    throw PreconditionError("grid origin must be finite");
  }
}

namespace {

bool near_integer(double v, long& out) {
  const double r = std::round(v);
  if (std::abs(v - r) > 1e-9) return false;
  out = static_cast<long>(r);
  return true;
}

}  // namespace

bool lattice_aligned(const ComplexPlaneGrid& a, const ComplexPlaneGrid& b) {
  if (std::abs(a.dx - b.dx) > 1e-12 * a.dx || std::abs(a.dy - b.dy) > 1e-12 * a.dy) return false;
  long ox = 0, oy = 0;
  return near_integer((b.x_min - a.x_min) / a.dx, ox) && near_integer((b.y_min - a.y_min) / a.dy, oy);
}

std::pair<long, long> lattice_offset(const ComplexPlaneGrid& a, const ComplexPlaneGrid& b) {
  long ox = 0, oy = 0;
  if (!near_integer((b.x_min - a.x_min) / a.dx, ox) || !near_integer((b.y_min - a.y_min) / a.dy, oy)) {
    throw PreconditionError("grids are not lattice aligned");
  }
  return {ox, oy};
}

Field::Field(ComplexPlaneGrid grid) : grid_(grid), values_(grid.size()) { grid_.validate(); }

Field::Field(ComplexPlaneGrid grid, std::vector<cplx> values)
    : grid_(grid), values_(std::move(values)) {
  grid_.validate();
  if (values_.size() != grid_.size()) {
    throw PreconditionError("field has " + std::to_string(values_.size()) + " values for a grid of " +
                            std::to_string(grid_.size()) + " nodes");
  }
}

double Field::boundary_max() const {
  double m = 0.0;
  for (int i = 0; i < grid_.nx; ++i) {
    m = std::max({m, std::abs((*this)(i, 0)), std::abs((*this)(i, grid_.ny - 1))});
  }
  for (int j = 0; j < grid_.ny; ++j) {
    m = std::max({m, std::abs((*this)(0, j)), std::abs((*this)(grid_.nx - 1, j))});
  }
  return m;
}

double Field::max_abs() const {
  double m = 0.0;
  for (const cplx& v : values_) m = std::max(m, std::abs(v));
  return m;
}

Field& Field::operator*=(cplx a) {
  for (cplx& v : values_) v *= a;
  return *this;
}

Field sample(const std::function<cplx(cplx)>& f, const ComplexPlaneGrid& grid) {
  Field out(grid);
  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.ny; ++j) {
      const cplx v = f(grid.node(i, j));
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw PreconditionError("non-finite sample at node (" + std::to_string(i) + ", " +
                                std::to_string(j) + ")");
      }
      out(i, j) = v;
    }
  }
  return out;
}

cplx integrate(const Field& field, Measure measure) {
  const ComplexPlaneGrid& g = field.grid();
  cplx total = 0.0;
  for (int i = 0; i < g.nx; ++i) {
    cplx row = 0.0;
    for (int j = 0; j < g.ny; ++j) row += trapezoid_weight(j, g.ny) * field(i, j);
    total += trapezoid_weight(i, g.nx) * row;
  }
  total *= g.cell_area();
  switch (measure) {
    case Measure::Plain:
      return total;
    case Measure::D2OverPi:
      return total / std::numbers::pi;
    case Measure::D2Over2Pi:
      return total / (2.0 * std::numbers::pi);
  }
  return total;
}

ScaleGrid ScaleGrid::log_spaced(int count, double mu_min, double mu_max) {
  if (count < 1) throw PreconditionError("scale grid needs at least one node");
  if (!(mu_min > 0.0) || !(mu_max >= mu_min)) {
    throw PreconditionError("scale grid needs 0 < mu_min <= mu_max");
  }
  if (count == 1) return single(mu_min);
  if (!(mu_max > mu_min)) throw PreconditionError("scale grid with several nodes needs mu_min < mu_max");
  std::vector<double> mu(count);
  const double lo = std::log(mu_min);
  const double step = (std::log(mu_max) - lo) / (count - 1);
  for (int k = 0; k < count; ++k) mu[k] = std::exp(lo + k * step);
  mu.front() = mu_min;
  mu.back() = mu_max;
  ScaleGrid s;
  s.mu_ = std::move(mu);
  return s;
}

ScaleGrid ScaleGrid::single(double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw PreconditionError("scale must be positive");
  ScaleGrid s;
  s.mu_ = {mu};
  return s;
}

ScaleGrid ScaleGrid::from_values(std::vector<double> mu) {
  if (mu.empty()) throw PreconditionError("scale grid needs at least one node");
  if (!(mu.front() > 0.0)) throw PreconditionError("scales must be positive");
  for (std::size_t k = 1; k < mu.size(); ++k) {
    if (!(mu[k] > mu[k - 1])) throw PreconditionError("scales must be strictly increasing");
  }
  if (mu.size() > 2) {
    const double r0 = std::log(mu[1] / mu[0]);
    for (std::size_t k = 2; k < mu.size(); ++k) {
      if (std::abs(std::log(mu[k] / mu[k - 1]) - r0) > 1e-12 * std::max(1.0, std::abs(r0)) + 1e-12) {
        throw PreconditionError("scales must be log-spaced");
      }
    }
  }
  ScaleGrid s;
  s.mu_ = std::move(mu);
  return s;
}

ScaleGrid ScaleGrid::doubled_range() const {
  if (mu_.empty()) throw PreconditionError("empty scale grid");
  return log_spaced(static_cast<int>(mu_.size()), mu_min() / 2.0, mu_max() * 2.0);
}

std::vector<double> scale_weights(const ScaleGrid& scales, int power) {
  if (scales.empty()) throw PreconditionError("scale_weights: empty scale grid");
  if (power < 1 || power > 5) {
    throw PreconditionError("scale_weights: unsupported power " + std::to_string(power));
  }
  const std::size_t n = scales.size();
  std::vector<double> w(n, 0.0);
  if (n == 1) return w;
  // Trapezoid in t = ln mu: dmu / mu^p = mu^{1-p} dt.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double h = std::log(scales[k + 1] / scales[k]);
    w[k] += 0.5 * h;
    w[k + 1] += 0.5 * h;
  }
  for (std::size_t k = 0; k < n; ++k) w[k] *= std::pow(scales[k], 1 - power);
  return w;
}

ComplexPlaneGrid default_grid() { return ComplexPlaneGrid::symmetric(kDefaultGridN, kDefaultGridExtent); }

ScaleGrid default_scales() { return ScaleGrid::log_spaced(kDefaultScaleCount, kDefaultMuMin, kDefaultMuMax); }

}  // namespace entwave
