#include "entwave/io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "entwave/error.hpp"

namespace entwave {

namespace {

static_assert(std::endian::native == std::endian::little || std::endian::native == std::endian::big);

template <class T>
T to_little(T v) {
  if constexpr (std::endian::native == std::endian::big) {
    auto bytes = std::bit_cast<std::array<unsigned char, sizeof(T)>>(v);
    std::reverse(bytes.begin(), bytes.end());
    return std::bit_cast<T>(bytes);
  }
  return v;
}

void put_u32(std::ostream& os, std::uint32_t v) {
  v = to_little(v);
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

void put_f64(std::ostream& os, double v) {
  v = to_little(v);
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

void get_bytes(std::istream& is, char* out, std::size_t n, const char* what) {
  is.read(out, static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(is.gcount()) != n) throw FormatError(std::string("truncated input while reading ") + what);
}

std::uint32_t get_u32(std::istream& is, const char* what) {
  std::uint32_t v = 0;
  get_bytes(is, reinterpret_cast<char*>(&v), sizeof v, what);
  return to_little(v);
}

double get_f64(std::istream& is, const char* what) {
  double v = 0.0;
  get_bytes(is, reinterpret_cast<char*>(&v), sizeof v, what);
  return to_little(v);
}

void expect_magic(std::istream& is, const char* magic) {
  char buf[4];
  get_bytes(is, buf, 4, "magic");
  if (std::memcmp(buf, magic, 4) != 0) throw FormatError(std::string("bad magic, expected ") + magic);
}

void put_grid_header(std::ostream& os, const ComplexPlaneGrid& g) {
  os.write("EWG1", 4);
  put_u32(os, static_cast<std::uint32_t>(g.nx));
  put_u32(os, static_cast<std::uint32_t>(g.ny));
  put_f64(os, g.x_min);
  put_f64(os, g.y_min);
  put_f64(os, g.dx);
  put_f64(os, g.dy);
}

ComplexPlaneGrid get_grid_header(std::istream& is) {
  expect_magic(is, "EWG1");
  const std::uint32_t nx = get_u32(is, "nx");
  const std::uint32_t ny = get_u32(is, "ny");
  ComplexPlaneGrid g;
  g.x_min = get_f64(is, "x_min");
  g.y_min = get_f64(is, "y_min");
  g.dx = get_f64(is, "dx");
  g.dy = get_f64(is, "dy");
  constexpr std::uint32_t kMaxSide = 1u << 15;
  if (nx == 0 || ny == 0 || nx > kMaxSide || ny > kMaxSide) throw FormatError("grid dimensions out of range");
  if (!std::isfinite(g.x_min) || !std::isfinite(g.y_min) || !(g.dx > 0.0) || !(g.dy > 0.0) ||
      !std::isfinite(g.dx) || !std::isfinite(g.dy))
    throw FormatError("grid header holds invalid geometry");
  g.nx = static_cast<int>(nx);
  g.ny = static_cast<int>(ny);
  return g;
}

void put_values(std::ostream& os, std::span<const cplx> values) {
  for (const cplx& v : values) {
    put_f64(os, v.real());
    put_f64(os, v.imag());
  }
}

std::vector<cplx> get_values(std::istream& is, std::size_t n) {
  std::vector<cplx> out(n);
  for (cplx& v : out) {
    const double re = get_f64(is, "values");
    const double im = get_f64(is, "values");
    v = {re, im};
  }
  return out;
}

void expect_end(std::istream& is) {
  if (is.peek() != std::char_traits<char>::eof()) throw FormatError("trailing bytes after payload");
}

template <class Writer>
void atomic_write(const std::filesystem::path& path, Writer&& write) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw PreconditionError("cannot open " + tmp.string() + " for writing");
    write(os);
    os.flush();
    if (!os) throw PreconditionError("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw PreconditionError("cannot move output into place at " + path.string() + ": " + ec.message());
  }
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw PreconditionError("cannot open " + path.string());
  return is;
}

}  // namespace

void write_ewg(std::ostream& os, const Field& field) {
  put_grid_header(os, field.grid());
  put_values(os, field.values());
}

Field read_ewg(std::istream& is) {
  const ComplexPlaneGrid g = get_grid_header(is);
  std::vector<cplx> values = get_values(is, g.size());
  expect_end(is);
  return Field(g, std::move(values));
}

void write_ewc(std::ostream& os, const CcwtCoefficients& coeffs) {
  os.write("EWC1", 4);
  put_u32(os, static_cast<std::uint32_t>(coeffs.scales.size()));
  for (double mu : coeffs.scales.values()) put_f64(os, mu);
  put_grid_header(os, coeffs.kappa_grid);
  for (const auto& plane : coeffs.planes) put_values(os, plane);
}

CcwtCoefficients read_ewc(std::istream& is) {
  expect_magic(is, "EWC1");
  const std::uint32_t count = get_u32(is, "scale count");
  if (count == 0 || count > 1u << 16) throw FormatError("scale count out of range");
  std::vector<double> mu(count);
  for (double& m : mu) m = get_f64(is, "scales");
  CcwtCoefficients c;
  try {
    c.scales = count == 1 ? ScaleGrid::single(mu[0]) : ScaleGrid::from_values(mu);
  } catch (const PreconditionError& e) {
    throw FormatError(std::string("invalid scale list: ") + e.what());
  }
  c.kappa_grid = get_grid_header(is);
  c.planes.reserve(count);
  for (std::uint32_t k = 0; k < count; ++k) c.planes.push_back(get_values(is, c.kappa_grid.size()));
  expect_end(is);
  return c;
}

void write_field_csv(std::ostream& os, const Field& field) {
  const ComplexPlaneGrid& g = field.grid();
  os << "x,y,re,im\n" << std::setprecision(17);
  for (int i = 0; i < g.nx; ++i) {
    for (int j = 0; j < g.ny; ++j) {
      const cplx z = g.node(i, j);
      const cplx v = field(i, j);
      os << z.real() << ',' << z.imag() << ',' << v.real() << ',' << v.imag() << '\n';
    }
  }
}

// Rebuilds the grid from the node coordinates; rows must come in storage
// order (x outer, y inner) and sit on a uniform lattice.
Field read_field_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw FormatError("empty CSV input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "x,y,re,im") throw FormatError("CSV header must be x,y,re,im");
  std::vector<std::array<double, 4>> rows;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::array<double, 4> r{};
    std::istringstream ls(line);
    for (int k = 0; k < 4; ++k) {
      std::string cell;
      if (!std::getline(ls, cell, ',')) throw FormatError("CSV row with fewer than four columns: " + line);
      std::size_t used = 0;
      try {
        r[k] = std::stod(cell, &used);
      } catch (const std::exception&) {
        throw FormatError("CSV cell is not a number: " + cell);
      }
      if (used != cell.size()) throw FormatError("CSV cell is not a number: " + cell);
    }
    std::string extra;
    if (std::getline(ls, extra)) throw FormatError("CSV row with more than four columns: " + line);
    rows.push_back(r);
  }
  if (rows.empty()) throw FormatError("CSV holds no nodes");

  std::size_t ny = 1;
  while (ny < rows.size() && rows[ny][0] == rows[0][0]) ++ny;
  if (rows.size() % ny != 0) throw FormatError("CSV rows do not form a rectangular grid");
  const std::size_t nx = rows.size() / ny;
  ComplexPlaneGrid g;
  g.nx = static_cast<int>(nx);
  g.ny = static_cast<int>(ny);
  g.x_min = rows[0][0];
  g.y_min = rows[0][1];
  g.dx = nx > 1 ? rows[ny][0] - rows[0][0] : 1.0;
  g.dy = ny > 1 ? rows[1][1] - rows[0][1] : 1.0;
  if (!(g.dx > 0.0) || !(g.dy > 0.0)) throw FormatError("CSV nodes are not increasing");
  std::vector<cplx> values(rows.size());
  for (std::size_t m = 0; m < rows.size(); ++m) {
    const cplx expected = g.node(static_cast<int>(m / ny), static_cast<int>(m % ny));
    const double tol = 1e-9 * (std::abs(expected) + g.dx + g.dy);
    if (std::abs(rows[m][0] - expected.real()) > tol || std::abs(rows[m][1] - expected.imag()) > tol)
      throw FormatError("CSV nodes do not lie on a uniform grid");
    values[m] = {rows[m][2], rows[m][3]};
  }
  return Field(g, std::move(values));
}

void save_field(const std::filesystem::path& path, const Field& field, FieldFormat format) {
  atomic_write(path, [&](std::ostream& os) {
    if (format == FieldFormat::Ewg) write_ewg(os, field);
    else write_field_csv(os, field);
  });
}

void save_coefficients(const std::filesystem::path& path, const CcwtCoefficients& coeffs) {
  atomic_write(path, [&](std::ostream& os) { write_ewc(os, coeffs); });
}

void save_text(const std::filesystem::path& path, const std::string& text) {
  atomic_write(path, [&](std::ostream& os) { os << text; });
}

Field load_field(const std::filesystem::path& path) {
  std::ifstream is = open_input(path);
  char magic[4] = {};
  is.read(magic, 4);
  const bool binary = is.gcount() == 4 && std::memcmp(magic, "EWG1", 4) == 0;
  is.clear();
  is.seekg(0);
  return binary ? read_ewg(is) : read_field_csv(is);
}

CcwtCoefficients load_coefficients(const std::filesystem::path& path) {
  std::ifstream is = open_input(path);
  return read_ewc(is);
}

}  // namespace entwave
