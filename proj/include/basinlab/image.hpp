#ifndef BASINLAB_IMAGE_HPP
#define BASINLAB_IMAGE_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "basinlab/dynamics.hpp"

namespace basinlab {

using Rgb = std::array<std::uint8_t, 3>;

/// Origin black, alpha_k at hue k/d (full saturation and value), ToInfinity white,
/// Undecided gray.
Rgb label_color(Label l, int d);

/// Row-major RGB triples, top row first.
std::vector<std::uint8_t> render_rgb(const BasinGrid& grid);

/// Binary PPM, P6, maxval 255.
void write_ppm(std::ostream& out, const BasinGrid& grid);
void write_ppm(const std::string& path, const BasinGrid& grid);

}  // namespace basinlab

#endif  // BASINLAB_IMAGE_HPP
