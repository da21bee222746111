#include "basinlab/grid_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

namespace basinlab {

namespace {

constexpr std::array<char, 8> kMagic{'B', 'A', 'S', 'I', 'N', 'G', 'R', 'D'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void put_le(std::ostream& out, T value) {
    std::array<unsigned char, sizeof(T)> bytes{};
    std::memcpy(bytes.data(), &value, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) {
        std::reverse(bytes.begin(), bytes.end());
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), sizeof(T));
}

template <class T>
T get_le(std::istream& in) {
    std::array<unsigned char, sizeof(T)> bytes{};
    if (!in.read(reinterpret_cast<char*>(bytes.data()), sizeof(T))) {
        throw Error("grid dump truncated");
    }
    if constexpr (std::endian::native == std::endian::big) {
        std::reverse(bytes.begin(), bytes.end());
    }
    T value;
    std::memcpy(&value, bytes.data(), sizeof(T));
    return value;
}

}  // namespace

void write_grid(std::ostream& out, const BasinGrid& grid) {
    const GridSpec& s = grid.spec;
    out.write(kMagic.data(), kMagic.size());
    put_le<std::uint32_t>(out, kVersion);
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(grid.method));
    put_le<std::uint32_t>(out, grid.d > 0 ? 0U : 1U);
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(grid.d));
    put_le<double>(out, s.center.re());
    put_le<double>(out, s.center.im());
    put_le<double>(out, s.half_width);
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(s.resolution));
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(s.max_iter));
    put_le<double>(out, s.conv_tol);
    put_le<double>(out, s.escape_radius);
    for (std::size_t i = 0; i < grid.labels.size(); ++i) {
        put_le<std::uint8_t>(out, grid.labels[i]);
        put_le<std::uint16_t>(out, grid.iterations[i]);
    }
    if (!out) {
        throw Error("failed to write grid dump");
    }
}

void write_grid(const std::string& path, const BasinGrid& grid) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open " + path + " for writing");
    }
    write_grid(out, grid);
}

BasinGrid read_grid(std::istream& in) {
    std::array<char, 8> magic{};
    if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
        throw Error("not a BasinGrid dump");
    }
    if (get_le<std::uint32_t>(in) != kVersion) {
        throw Error("unsupported BasinGrid dump version");
    }
    BasinGrid g;
    const auto method = get_le<std::uint32_t>(in);
    if (method > static_cast<std::uint32_t>(MethodKind::Traub)) {
        throw Error("unknown method id in grid dump");
    }
    g.method = static_cast<MethodKind>(method);
    (void)get_le<std::uint32_t>(in);
    g.d = static_cast<int>(get_le<std::uint32_t>(in));
    const double re = get_le<double>(in);
    const double im = get_le<double>(in);
    g.spec.center = ComplexPoint(re, im);
    g.spec.half_width = get_le<double>(in);
    g.spec.resolution = static_cast<int>(get_le<std::uint32_t>(in));
    g.spec.max_iter = static_cast<int>(get_le<std::uint32_t>(in));
    g.spec.conv_tol = get_le<double>(in);
    g.spec.escape_radius = get_le<double>(in);
    if (g.spec.resolution < 1 || g.spec.resolution > 100000) {
        throw Error("implausible resolution in grid dump");
    }
    const auto n = static_cast<std::size_t>(g.spec.resolution) * static_cast<std::size_t>(g.spec.resolution);
    g.labels.resize(n);
    g.iterations.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        g.labels[i] = get_le<std::uint8_t>(in);
        g.iterations[i] = get_le<std::uint16_t>(in);
    }
    return g;
}

BasinGrid read_grid(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path);
    }
    return read_grid(in);
}

}  // namespace basinlab
