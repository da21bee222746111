#ifndef BASINLAB_GRID_IO_HPP
#define BASINLAB_GRID_IO_HPP

#include <iosfwd>
#include <string>

#include "basinlab/dynamics.hpp"

namespace basinlab {

/// Raw BasinGrid dump, all fields little-endian:
///   char[8] "BASINGRD", u32 version (1), u32 method, u32 source (0 family, 1 generic), u32 d,
///   f64 center_re, f64 center_im, f64 half_width, u32 resolution, u32 max_iter,
///   f64 conv_tol, f64 escape_radius,
///   then resolution^2 records of (u8 label, u16 iterations), row-major from the top row.
void write_grid(std::ostream& out, const BasinGrid& grid);
void write_grid(const std::string& path, const BasinGrid& grid);

/// Throws Error on a bad magic, version or truncated stream.
BasinGrid read_grid(std::istream& in);
BasinGrid read_grid(const std::string& path);

}  // namespace basinlab

#endif  // BASINLAB_GRID_IO_HPP
