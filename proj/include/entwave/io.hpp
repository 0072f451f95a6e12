#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "entwave/ccwt.hpp"
#include "entwave/grid.hpp"

namespace entwave {

// EWG1: "EWG1", u32 nx, u32 ny, f64 x_min, y_min, dx, dy, then nx*ny (re, im)
// f64 pairs row-major. All little-endian.
void write_ewg(std::ostream& os, const Field& field);
Field read_ewg(std::istream& is);

// EWC1: "EWC1", u32 scale count, the scales as f64, an EWG1 header for the
// kappa grid, then one plane per scale in scale order.
void write_ewc(std::ostream& os, const CcwtCoefficients& coeffs);
CcwtCoefficients read_ewc(std::istream& is);

// CSV with header x,y,re,im, one node per row in storage order.
void write_field_csv(std::ostream& os, const Field& field);
Field read_field_csv(std::istream& is);

enum class FieldFormat { Ewg, Csv };

// Writes to a sibling temporary file, then renames it over `path`.
void save_field(const std::filesystem::path& path, const Field& field, FieldFormat format);
void save_coefficients(const std::filesystem::path& path, const CcwtCoefficients& coeffs);
void save_text(const std::filesystem::path& path, const std::string& text);

// Picks EWG1 or CSV from the leading magic bytes. Throws FormatError.
Field load_field(const std::filesystem::path& path);
CcwtCoefficients load_coefficients(const std::filesystem::path& path);

}  // namespace entwave
