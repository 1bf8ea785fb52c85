// Grid field serialization.
//
// Binary format (little-endian, 32-byte header):
//   offset  size  field
//   0       4     magic "FRIT"
//   4       4     u32 format version (currently 1)
//   8       4     u32 dimension n
//   12      4     u32 samples per axis N
//   16      8     f64 box side L
//   24      8     reserved, zero
// followed by N^n f64 samples in row-major order (axis 0 slowest).
//
// CSV export writes one row per grid point: per-axis index, per-axis
// coordinate, and the sample value, after a header row.
#pragma once

#include <string>

#include "frit/field.hpp"

namespace frit {

void write_field_binary(const std::string& path, const GridField& f);
GridField read_field_binary(const std::string& path);

void write_field_csv(const std::string& path, const GridField& f);

// Deterministic, round-trip-exact decimal formatting used by every CSV/JSON
// writer in the library ("%.17g").
std::string format_real(Real v);

}  // namespace frit
