#include "dctlab/pgm.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>
#include <string>

namespace dctlab {

ImageGray8 ImageGray8::blank(int width, int height, std::uint8_t fill) {
    ImageGray8 img;
    img.width = width;
    img.height = height;
    img.pixels.assign(static_cast<std::size_t>(width) * height, fill);
    return img;
}

namespace {

// next token, skipping whitespace and '#' comment lines
std::string next_token(std::istream& in) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {}
            continue;
        }
        if (!std::isspace(c)) {
            tok.push_back(static_cast<char>(c));
            while ((c = in.peek()) != EOF && !std::isspace(c) && c != '#')
                tok.push_back(static_cast<char>(in.get()));
            return tok;
        }
    }
    throw std::runtime_error("unexpected end of PGM header");
}

} // namespace

ImageGray8 read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    if (next_token(in) != "P5")
        throw std::runtime_error("'" + path.string() + "' is not a binary PGM (P5) file");
    ImageGray8 img;
    try {
        img.width = std::stoi(next_token(in));
        img.height = std::stoi(next_token(in));
        const int maxval = std::stoi(next_token(in));
        if (img.width <= 0 || img.height <= 0) throw std::runtime_error("bad dimensions");
        if (maxval <= 0 || maxval > 255)
            throw std::runtime_error("only 8-bit PGM supported (maxval <= 255)");
    } catch (const std::logic_error&) {
        throw std::runtime_error("malformed PGM header in '" + path.string() + "'");
    }
    in.get();  // single whitespace byte after maxval
    img.pixels.resize(static_cast<std::size_t>(img.width) * img.height);
    in.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(img.pixels.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.pixels.size()))
        throw std::runtime_error("truncated PGM pixel data in '" + path.string() + "'");
    return img;
}

void write_pgm(const ImageGray8& img, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

} // namespace dctlab
