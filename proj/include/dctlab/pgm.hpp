#ifndef DCTLAB_PGM_HPP
#define DCTLAB_PGM_HPP

#include <cstdint>
#include <filesystem>
#include <vector>

namespace dctlab {

/// 8-bit grayscale image, row-major.
struct ImageGray8 {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(int row, int col) const { return pixels[static_cast<std::size_t>(row) * width + col]; }
    std::uint8_t& at(int row, int col) { return pixels[static_cast<std::size_t>(row) * width + col]; }
    bool operator==(const ImageGray8&) const = default;

    static ImageGray8 blank(int width, int height, std::uint8_t fill = 0);
};

/// Binary PGM (P5) with maxval <= 255. Throws std::runtime_error on malformed
/// input or I/O failure.
ImageGray8 read_pgm(const std::filesystem::path& path);
void write_pgm(const ImageGray8& img, const std::filesystem::path& path);

} // namespace dctlab

#endif
