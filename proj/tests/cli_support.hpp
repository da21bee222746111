// Helpers shared by the CLI test and the acceptance runner.
#ifndef BASINLAB_TESTS_CLI_SUPPORT_HPP
#define BASINLAB_TESTS_CLI_SUPPORT_HPP

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include <openssl/evp.h>

namespace cli {

struct Result {
    int code = -1;
    std::string out;
};

inline Result run(const std::string& args) {
    const std::string cmd = std::string(BASINLAB_CLI) + " " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), n);
    }
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::string sha256_hex(const std::string& data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

inline std::string golden_hash() {
    std::string h = slurp(std::filesystem::path(GOLDEN_DIR) / "halley_d6_res301.sha256");
    while (!h.empty() && (h.back() == '\n' || h.back() == ' ')) {
        h.pop_back();
    }
    return h;
}

inline std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "basinlab-tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

/// Parsed binary PPM.
struct Image {
    int width = 0;
    int height = 0;
    std::string rgb;
    bool black(int row, int col) const {
        const std::size_t i = 3 * (static_cast<std::size_t>(row) * static_cast<std::size_t>(width) + static_cast<std::size_t>(col));
        return rgb[i] == 0 && rgb[i + 1] == 0 && rgb[i + 2] == 0;
    }
};

inline Image parse_ppm(const std::string& bytes) {
    Image img;
    int maxval = 0;
    int consumed = 0;
    if (std::sscanf(bytes.c_str(), "P6 %d %d %d%n", &img.width, &img.height, &maxval, &consumed) != 3 ||
        maxval != 255) {
        return {};
    }
    img.rgb = bytes.substr(static_cast<std::size_t>(consumed) + 1);
    return img;
}

}  // namespace cli

#endif
