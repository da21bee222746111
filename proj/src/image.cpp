#include "basinlab/image.hpp"

#include <fstream>
#include <ostream>

namespace basinlab {

namespace {

constexpr Rgb kBlack{0, 0, 0};
constexpr Rgb kWhite{255, 255, 255};
constexpr Rgb kGray{128, 128, 128};

// Integer HSV -> RGB at full saturation/value, so colors do not depend on float rounding.
Rgb hue_color(int k, int d) {
    const int h6 = 6 * 255 * k / d;  // hue scaled to [0, 6*255)
    const int sector = h6 / 255;
    const auto f = static_cast<std::uint8_t>(h6 % 255);
    const auto q = static_cast<std::uint8_t>(255 - f);
    switch (sector) {
        case 0: return {255, f, 0};
        case 1: return {q, 255, 0};
        case 2: return {0, 255, f};
        case 3: return {0, q, 255};
        case 4: return {f, 0, 255};
        default: return {255, 0, q};
    }
}

}  // namespace

Rgb label_color(Label l, int d) {
    if (l == kToInfinity) {
        return kWhite;
    }
    if (l == kUndecided) {
        return kGray;
    }
    if (l == 0) {
        return kBlack;
    }
    const int n = d > 0 ? d : 1;
    return hue_color((l - 1) % n, n);
}

std::vector<std::uint8_t> render_rgb(const BasinGrid& grid) {
    std::vector<std::uint8_t> rgb;
    rgb.reserve(grid.labels.size() * 3);
    const int d = grid.d > 0 ? grid.d : 1;
    for (const Label l : grid.labels) {
        const Rgb c = label_color(l, d);
        rgb.insert(rgb.end(), c.begin(), c.end());
    }
    return rgb;
}

void write_ppm(std::ostream& out, const BasinGrid& grid) {
    const int res = grid.spec.resolution;
    out << "P6\n" << res << ' ' << res << "\n255\n";
    const std::vector<std::uint8_t> rgb = render_rgb(grid);
    out.write(reinterpret_cast<const char*>(rgb.data()), static_cast<std::streamsize>(rgb.size()));
    if (!out) {
        throw Error("failed to write PPM");
    }
}

void write_ppm(const std::string& path, const BasinGrid& grid) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open " + path + " for writing");
    }
    write_ppm(out, grid);
}

}  // namespace basinlab
