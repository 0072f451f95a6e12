#include "entwave/ccwt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "entwave/error.hpp"
#include "fft2d.hpp"
#include "parallel.hpp"

namespace entwave {

namespace {

constexpr double kPi = std::numbers::pi;

void check_decay(const Field& g) {
  const double peak = g.max_abs();
  if (g.boundary_max() > kTransformDecayThreshold * peak) {
    throw PreconditionError("field does not decay at the grid boundary (boundary " +
                            std::to_string(g.boundary_max()) + ", peak " + std::to_string(peak) + ")");
  }
}

void check_plane_wavelet(const MotherWavelet& w) {
  if (w.kind() == WaveletKind::MexicanHat1D) {
    throw PreconditionError("the complex-plane transform needs a plane wavelet");
  }
}

// g times the trapezoid weights of its own grid.
std::vector<cplx> weighted_samples(const Field& g) {
  const ComplexPlaneGrid& grid = g.grid();
  std::vector<cplx> out(grid.size());
  for (int i = 0; i < grid.nx; ++i) {
    const double wi = trapezoid_weight(i, grid.nx);
    for (int j = 0; j < grid.ny; ++j) out[grid.index(i, j)] = wi * trapezoid_weight(j, grid.ny) * g(i, j);
  }
  return out;
}

// psi((dxi * dx + i dyi * dy) / mu) for the lattice displacement (dxi, dyi).
// All supported plane wavelets are real, so psi* = psi.
double lattice_wavelet(const MotherWavelet& w, long dxi, long dyi, double dx, double dy, double mu) {
  const double a = dxi * dx;
  const double b = dyi * dy;
  return w.radial((a * a + b * b) / (mu * mu));
}

std::vector<cplx> direct_plane_aligned(const std::vector<cplx>& gw, const ComplexPlaneGrid& gg,
                                       const ComplexPlaneGrid& kg, const MotherWavelet& w, double mu) {
  const auto [sx, sy] = lattice_offset(kg, gg);  // eta_i - kappa_p = (i - p + sx) dx
  const long dmin_x = -(kg.nx - 1) + sx;
  const long span_x = static_cast<long>(gg.nx) + kg.nx - 1;
  const long span_y = static_cast<long>(gg.ny) + kg.ny - 1;
  const long dmax_y = (gg.ny - 1) + sy;

  // Row r holds displacement dxi = dmin_x + r; entry t holds dyi = dmax_y - t,
  // so the innermost loop over q walks forward through memory.
  std::vector<double> table(static_cast<std::size_t>(span_x) * span_y);
  for (long r = 0; r < span_x; ++r) {
    for (long t = 0; t < span_y; ++t) {
      table[static_cast<std::size_t>(r) * span_y + t] = lattice_wavelet(w, dmin_x + r, dmax_y - t, gg.dx, gg.dy, mu);
    }
  }

  std::vector<double> re(kg.ny), im(kg.ny);
  std::vector<cplx> plane(kg.size());
  const double scale = gg.cell_area() / (kPi * mu);
  for (int p = 0; p < kg.nx; ++p) {
    std::fill(re.begin(), re.end(), 0.0);
    std::fill(im.begin(), im.end(), 0.0);
    for (int i = 0; i < gg.nx; ++i) {
      const double* row = &table[static_cast<std::size_t>(i - p + sx - dmin_x) * span_y];
      for (int j = 0; j < gg.ny; ++j) {
        const cplx gij = gw[gg.index(i, j)];
        const double gr = gij.real();
        const double gi = gij.imag();
        const double* k = row + (gg.ny - 1 - j);
        for (int q = 0; q < kg.ny; ++q) {
          re[q] += gr * k[q];
          im[q] += gi * k[q];
        }
      }
    }
    for (int q = 0; q < kg.ny; ++q) plane[kg.index(p, q)] = scale * cplx(re[q], im[q]);
  }
  return plane;
}

std::vector<cplx> direct_plane_general(const std::vector<cplx>& gw, const ComplexPlaneGrid& gg,
                                       const ComplexPlaneGrid& kg, const MotherWavelet& w, double mu) {
  std::vector<cplx> plane(kg.size());
  const double scale = gg.cell_area() / (kPi * mu);
  for (int p = 0; p < kg.nx; ++p) {
    for (int q = 0; q < kg.ny; ++q) {
      const cplx kappa = kg.node(p, q);
      cplx s = 0.0;
      for (int i = 0; i < gg.nx; ++i) {
        for (int j = 0; j < gg.ny; ++j) {
          s += gw[gg.index(i, j)] * w.radial(std::norm(gg.node(i, j) - kappa) / (mu * mu));
        }
      }
      plane[kg.index(p, q)] = scale * s;
    }
  }
  return plane;
}

}  // namespace

CcwtCoefficients forward(const Field& g, const MotherWavelet& w, const ScaleGrid& scales) {
  return forward(g, w, scales, g.grid());
}

CcwtCoefficients forward(const Field& g, const MotherWavelet& w, const ScaleGrid& scales,
                         const ComplexPlaneGrid& kappa_grid) {
  check_plane_wavelet(w);
  if (scales.empty()) throw PreconditionError("forward: empty scale grid");
  kappa_grid.validate();
  check_decay(g);

  const std::vector<cplx> gw = weighted_samples(g);
  const bool aligned = lattice_aligned(kappa_grid, g.grid());
  CcwtCoefficients out{scales, kappa_grid, std::vector<std::vector<cplx>>(scales.size())};
  detail::parallel_for(scales.size(), [&](std::size_t k) {
    out.planes[k] = aligned ? direct_plane_aligned(gw, g.grid(), kappa_grid, w, scales[k])
                            : direct_plane_general(gw, g.grid(), kappa_grid, w, scales[k]);
  });
  return out;
}

CcwtCoefficients forward_fast(const Field& g, const MotherWavelet& w, const ScaleGrid& scales) {
  check_plane_wavelet(w);
  if (scales.empty()) throw PreconditionError("forward_fast: empty scale grid");
  check_decay(g);

  const ComplexPlaneGrid& gg = g.grid();
  const int nx = gg.nx;
  const int ny = gg.ny;
  const detail::Fft2d fft(detail::fast_fft_size(2 * nx - 1), detail::fast_fft_size(2 * ny - 1));
  const int px = fft.px();
  const int py = fft.py();

  // Spectrum of the weighted, zero-padded signal, shared by every scale.
  detail::FftBuffer signal = detail::make_fft_buffer(fft.size());
  std::fill(signal.get(), signal.get() + fft.size(), cplx(0.0));
  const std::vector<cplx> gw = weighted_samples(g);
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) signal[static_cast<std::size_t>(i) * py + j] = gw[gg.index(i, j)];
  }
  fft.forward(signal.get());

  CcwtCoefficients out{scales, gg, std::vector<std::vector<cplx>>(scales.size())};
  detail::parallel_for(scales.size(), [&](std::size_t k) {
    const double mu = scales[k];
    detail::FftBuffer buf = detail::make_fft_buffer(fft.size());
    std::fill(buf.get(), buf.get() + fft.size(), cplx(0.0));
    // W[p] = sum_i G[i] K[i - p] = (G * R)[p] with R[u] = K[-u]; u spans
    // [-(n-1), n-1] and is stored modulo the padded size.
    for (int u = -(nx - 1); u <= nx - 1; ++u) {
      const std::size_t row = static_cast<std::size_t>((u + px) % px) * py;
      for (int v = -(ny - 1); v <= ny - 1; ++v) {
        buf[row + static_cast<std::size_t>((v + py) % py)] = lattice_wavelet(w, -u, -v, gg.dx, gg.dy, mu);
      }
    }
    fft.forward(buf.get());
    for (std::size_t m = 0; m < fft.size(); ++m) buf[m] *= signal[m];
    fft.backward(buf.get());

    const double scale = gg.cell_area() / (kPi * mu) / static_cast<double>(fft.size());
    std::vector<cplx> plane(gg.size());
    for (int p = 0; p < nx; ++p) {
      for (int q = 0; q < ny; ++q) plane[gg.index(p, q)] = scale * buf[static_cast<std::size_t>(p) * py + q];
    }
    out.planes[k] = std::move(plane);
  });
  return out;
}

CcwtCoefficients forward_with(Engine engine, const Field& g, const MotherWavelet& w, const ScaleGrid& scales) {
  return engine == Engine::Fft ? forward_fast(g, w, scales) : forward(g, w, scales);
}

cplx coefficient_at(const Field& g, const MotherWavelet& w, double mu, cplx kappa) {
  check_plane_wavelet(w);
  if (!(mu > 0.0)) throw PreconditionError("scale must be positive");
  const ComplexPlaneGrid& gg = g.grid();
  const std::vector<cplx> gw = weighted_samples(g);
  cplx s = 0.0;
  for (int i = 0; i < gg.nx; ++i) {
    for (int j = 0; j < gg.ny; ++j) {
      s += gw[gg.index(i, j)] * std::conj(eval_wavelet(w, (gg.node(i, j) - kappa) / mu));
    }
  }
  return s * (gg.cell_area() / (kPi * mu));
}

Field inverse(const CcwtCoefficients& coeffs, const MotherWavelet& w, double c_prime,
              const ComplexPlaneGrid& out_grid) {
  check_plane_wavelet(w);
  if (!(c_prime > 0.0) || !std::isfinite(c_prime)) {
    throw PreconditionError("inverse: C'psi must be finite and positive");
  }
  out_grid.validate();
  const ComplexPlaneGrid& kg = coeffs.kappa_grid;
  const ScaleGrid& scales = coeffs.scales;
  if (coeffs.planes.size() != scales.size()) throw PreconditionError("inverse: plane count != scale count");
  const std::vector<double> mu_w = scale_weights(scales, 3);

  // Trapezoid-weighted W planes.
  auto weighted_plane = [&](std::size_t k) {
    std::vector<cplx> v(kg.size());
    for (int p = 0; p < kg.nx; ++p) {
      const double wp = trapezoid_weight(p, kg.nx);
      for (int q = 0; q < kg.ny; ++q) v[kg.index(p, q)] = wp * trapezoid_weight(q, kg.ny) * coeffs.planes[k][kg.index(p, q)];
    }
    return v;
  };

  const bool aligned = lattice_aligned(kg, out_grid);
  const int nox = out_grid.nx;
  const int noy = out_grid.ny;
  std::unique_ptr<detail::Fft2d> fft;
  if (aligned) fft = std::make_unique<detail::Fft2d>(detail::fast_fft_size(kg.nx + nox - 1),
                                                     detail::fast_fft_size(kg.ny + noy - 1));

  auto contribution = [&](std::size_t k) {
    const double mu = scales[k];
    const double factor = mu_w[k] * kg.cell_area() / (kPi * mu * c_prime);
    std::vector<cplx> v = weighted_plane(k);
    std::vector<cplx> part(out_grid.size());
    if (aligned) {
      const auto [ox, oy] = lattice_offset(kg, out_grid);  // eta_a - kappa_p = (a - p + ox) dx
      const int px = fft->px();
      const int py = fft->py();
      detail::FftBuffer a = detail::make_fft_buffer(fft->size());
      detail::FftBuffer b = detail::make_fft_buffer(fft->size());
      std::fill(a.get(), a.get() + fft->size(), cplx(0.0));
      std::fill(b.get(), b.get() + fft->size(), cplx(0.0));
      for (int p = 0; p < kg.nx; ++p) {
        for (int q = 0; q < kg.ny; ++q) a[static_cast<std::size_t>(p) * py + q] = v[kg.index(p, q)];
      }
      // out[a] = sum_p V[p] L[a - p] with L[u] = psi((u + o) dx / mu).
      for (int u = -(kg.nx - 1); u <= nox - 1; ++u) {
        const std::size_t row = static_cast<std::size_t>((u + px) % px) * py;
        for (int t = -(kg.ny - 1); t <= noy - 1; ++t) {
          b[row + static_cast<std::size_t>((t + py) % py)] = lattice_wavelet(w, u + ox, t + oy, kg.dx, kg.dy, mu);
        }
      }
      fft->forward(a.get());
      fft->forward(b.get());
      for (std::size_t m = 0; m < fft->size(); ++m) a[m] *= b[m];
      fft->backward(a.get());
      const double s = factor / static_cast<double>(fft->size());
      for (int i = 0; i < nox; ++i) {
        for (int j = 0; j < noy; ++j) part[out_grid.index(i, j)] = s * a[static_cast<std::size_t>(i) * py + j];
      }
    } else {
      for (int i = 0; i < nox; ++i) {
        for (int j = 0; j < noy; ++j) {
          const cplx eta = out_grid.node(i, j);
          cplx sum = 0.0;
          for (int p = 0; p < kg.nx; ++p) {
            for (int q = 0; q < kg.ny; ++q) {
              sum += v[kg.index(p, q)] * eval_wavelet(w, (eta - kg.node(p, q)) / mu);
            }
          }
          part[out_grid.index(i, j)] = factor * sum;
        }
      }
    }
    return part;
  };

  // Scales are computed in parallel batches and accumulated in scale order,
  // so the result does not depend on the schedule.
  Field out(out_grid);
  const std::size_t batch = detail::worker_count(scales.size());
  std::vector<std::vector<cplx>> parts(batch);
  for (std::size_t start = 0; start < scales.size(); start += batch) {
    const std::size_t count = std::min(batch, scales.size() - start);
    detail::parallel_for(count, [&](std::size_t b) { parts[b] = contribution(start + b); });
    for (std::size_t b = 0; b < count; ++b) {
      auto vals = out.values();
      for (std::size_t m = 0; m < vals.size(); ++m) vals[m] += parts[b][m];
    }
  }
  return out;
}

double max_relative_difference(const CcwtCoefficients& a, const CcwtCoefficients& b) {
  if (a.planes.size() != b.planes.size() || !(a.kappa_grid == b.kappa_grid)) {
    throw PreconditionError("coefficient sets have different shapes");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < a.planes.size(); ++k) {
    double diff = 0.0;
    double ref = 0.0;
    for (std::size_t m = 0; m < a.planes[k].size(); ++m) {
      diff = std::max(diff, std::abs(a.planes[k][m] - b.planes[k][m]));
      ref = std::max(ref, std::abs(b.planes[k][m]));
    }
    worst = std::max(worst, ref > 0.0 ? diff / ref : diff);
  }
  return worst;
}

cplx coefficient_pairing(const CcwtCoefficients& w1, const CcwtCoefficients& w2, int mu_power) {
  if (!(w1.kappa_grid == w2.kappa_grid) || w1.planes.size() != w2.planes.size()) {
    throw PreconditionError("coefficient_pairing: mismatched coefficient sets");
  }
  const ComplexPlaneGrid& kg = w1.kappa_grid;
  const std::vector<double> mu_w = scale_weights(w1.scales, mu_power);
  cplx total = 0.0;
  for (std::size_t k = 0; k < w1.planes.size(); ++k) {
    cplx plane = 0.0;
    for (int p = 0; p < kg.nx; ++p) {
      cplx row = 0.0;
      for (int q = 0; q < kg.ny; ++q) {
        const std::size_t m = kg.index(p, q);
        row += trapezoid_weight(q, kg.ny) * w1.planes[k][m] * std::conj(w2.planes[k][m]);
      }
      plane += trapezoid_weight(p, kg.nx) * row;
    }
    total += mu_w[k] * plane;
  }
  return total * (kg.cell_area() / kPi);
}

// --- 1D baseline -----------------------------------------------------------

Signal1D Signal1D::sample(const std::function<cplx(double)>& f, double x0, double dx, int count) {
  if (!(dx > 0.0)) throw PreconditionError("signal spacing must be positive");
  Signal1D s{x0, dx, {}};
  s.samples.reserve(count);
  for (int k = 0; k < count; ++k) s.samples.push_back(f(x0 + k * dx));
  return s;
}

Wavelet1D mexican_hat_1d() {
  return [](double x) -> cplx { return (1.0 - x * x) * std::exp(-0.5 * x * x); };
}

cplx cwt1d(const Signal1D& f, const Wavelet1D& psi, double mu, double s) {
  if (!(mu > 0.0)) throw PreconditionError("cwt1d: scale must be positive");
  if (!(f.dx > 0.0)) throw PreconditionError("cwt1d: signal spacing must be positive");
  const int n = static_cast<int>(f.size());
  cplx sum = 0.0;
  for (int k = 0; k < n; ++k) sum += trapezoid_weight(k, n) * f.samples[k] * std::conj(psi((f.x(k) - s) / mu));
  return sum * (f.dx / std::sqrt(mu));
}

Cwt1dCoefficients cwt1d_transform(const Signal1D& f, const Wavelet1D& psi, const ScaleGrid& scales) {
  if (scales.empty()) throw PreconditionError("cwt1d_transform: empty scale grid");
  if (f.size() == 0) throw PreconditionError("cwt1d_transform: empty signal");
  Cwt1dCoefficients out{scales, std::vector<Signal1D>(scales.size())};
  const double x_last = f.x(f.size() - 1);
  detail::parallel_for(scales.size(), [&](std::size_t k) {
    const double mu = scales[k];
    const double step = f.dx * std::max(1.0, std::floor(mu / (4.0 * f.dx)));
    const long pad = static_cast<long>(std::ceil(8.0 * mu / step));
    const long inner = static_cast<long>(std::floor((x_last - f.x0) / step + 1e-9));
    Signal1D row{f.x0 - pad * step, step, {}};
    row.samples.resize(static_cast<std::size_t>(inner + 2 * pad + 1));
    for (std::size_t m = 0; m < row.samples.size(); ++m) row.samples[m] = cwt1d(f, psi, mu, row.x(m));
    out.rows[k] = std::move(row);
  });
  return out;
}

Signal1D icwt1d(const Cwt1dCoefficients& coeffs, const Wavelet1D& psi, double c_psi, const Signal1D& x_grid) {
  if (!std::isfinite(c_psi) || !(c_psi > 0.0)) throw PreconditionError("icwt1d: C_psi must be finite and positive");
  if (coeffs.rows.size() != coeffs.scales.size()) throw PreconditionError("icwt1d: row count != scale count");
  const std::vector<double> mu_w = scale_weights(coeffs.scales, 2);
  Signal1D out{x_grid.x0, x_grid.dx, std::vector<cplx>(x_grid.size())};
  for (std::size_t a = 0; a < out.size(); ++a) {
    const double x = out.x(a);
    cplx total = 0.0;
    for (std::size_t k = 0; k < coeffs.rows.size(); ++k) {
      const double mu = coeffs.scales[k];
      const Signal1D& row = coeffs.rows[k];
      const int n = static_cast<int>(row.size());
      cplx s = 0.0;
      for (int m = 0; m < n; ++m) s += trapezoid_weight(m, n) * row.samples[m] * psi((x - row.x(m)) / mu);
      total += mu_w[k] * s * (row.dx / std::sqrt(mu));
    }
    out.samples[a] = total / c_psi;
  }
  return out;
}

}  // namespace entwave
