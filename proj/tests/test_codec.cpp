#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "doctest.h"

#include "dctlab/codec.hpp"
#include "dctlab/exact_dct.hpp"
#include "dctlab/metrics.hpp"

using namespace dctlab;

namespace {

const std::vector<ApproximationRecord>& catalog() {
    static const std::vector<ApproximationRecord> c = full_catalog();
    return c;
}

const ApproximationRecord& rec(const std::string& name) {
    const ApproximationRecord* r = find_record(catalog(), name);
    REQUIRE(r != nullptr);
    return *r;
}

ImageGray8 random_image(int w, int h, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(0, 255);
    ImageGray8 img = ImageGray8::blank(w, h);
    for (auto& p : img.pixels) p = static_cast<std::uint8_t>(dist(rng));
    return img;
}

} // namespace

TEST_CASE("zigzag scan") {
    const auto& zz = zigzag_order();
    CHECK(zz[0] == 0);      // (0,0)
    CHECK(zz[1] == 1);      // (0,1)
    CHECK(zz[2] == 8);      // (1,0)
    CHECK(zz[3] == 16);     // (2,0)
    CHECK(zz[4] == 9);      // (1,1)
    CHECK(zz[5] == 2);      // (0,2)
    CHECK(zz[6] == 3);      // (0,3)
    CHECK(zz[7] == 10);     // (1,2)
    CHECK(zz[63] == 63);    // (7,7)
    CHECK(std::set<int>(zz.begin(), zz.end()).size() == 64);
}

TEST_CASE("forward block") {
    Mat8d constant{};
    for (auto& row : constant)
        for (double& v : row) v = 5.0;

    SUBCASE("exact DCT compacts a constant block to DC") {
        const Mat8d coeffs = forward_block(rec("DCT"), constant);
        CHECK(coeffs[0][0] == doctest::Approx(40.0).epsilon(1e-12));
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                if (i || j) CHECK(std::abs(coeffs[i][j]) < 1e-12);
    }

    SUBCASE("T4 compacts a constant block to DC") {
        const Mat8d coeffs = forward_block(rec("T4"), constant);
        CHECK(coeffs[0][0] == doctest::Approx(40.0).epsilon(1e-12));
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                if (i || j) CHECK(std::abs(coeffs[i][j]) < 1e-12);
    }

    SUBCASE("degenerate records are refused") {
        Mat8d block{};
        CHECK_THROWS_AS(forward_block(rec("Td0"), block), std::invalid_argument);
        CHECK_THROWS_AS(inverse_block(rec("Td0"), block), std::invalid_argument);
    }
}

TEST_CASE("inverse block inverts forward block") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> dist(-128.0, 127.0);
    for (const char* name : {"DCT", "T0", "T4", "T7", "T~1", "T~2", "T~3", "T~4"}) {
        for (int trial = 0; trial < 10; ++trial) {
            Mat8d block{};
            for (auto& row : block)
                for (double& v : row) v = dist(rng);
            const Mat8d back = inverse_block(rec(name), forward_block(rec(name), block));
            CHECK(mat_max_abs_diff(back, block) < 1e-9);
        }
    }
}

TEST_CASE("DC-only reconstruction under the signed transform is constant") {
    Mat8d coeffs{};
    coeffs[0][0] = 16.0;
    const Mat8d block = inverse_block(rec("SDCT"), coeffs);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) CHECK(block[i][j] == doctest::Approx(block[0][0]).epsilon(1e-12));
}

TEST_CASE("compress_image validates input") {
    const ImageGray8 bad = ImageGray8::blank(12, 16);
    CHECK_THROWS_AS(compress_image(rec("DCT"), bad, {10}), std::invalid_argument);
    const ImageGray8 ok = ImageGray8::blank(16, 16);
    CHECK_THROWS_AS(compress_image(rec("DCT"), ok, {0}), std::invalid_argument);
    CHECK_THROWS_AS(compress_image(rec("DCT"), ok, {65}), std::invalid_argument);
}

TEST_CASE("full retention is lossless") {
    const ImageGray8 img = random_image(64, 64, 42);
    SUBCASE("exact DCT") {
        CHECK(compress_image(rec("DCT"), img, {64}) == img);
    }
    SUBCASE("orthogonal approximations") {
        for (const char* name : {"T0", "T1", "T2", "T3", "T4", "T5", "T6", "T7"})
            CHECK(compress_image(rec(name), img, {64}) == img);
    }
    SUBCASE("near-orthogonal approximations (exact inverse path)") {
        for (const char* name : {"T~1", "T~2", "T~3", "T~4"})
            CHECK(compress_image(rec(name), img, {64}) == img);
    }
}

TEST_CASE("r=1 under the exact DCT yields blockwise-constant output") {
    const ImageGray8 img = random_image(32, 32, 7);
    const ImageGray8 out = compress_image(rec("DCT"), img, {1});
    for (int by = 0; by < 32; by += 8)
        for (int bx = 0; bx < 32; bx += 8) {
            const std::uint8_t v = out.at(by, bx);
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) CHECK(out.at(by + i, bx + j) == v);
        }
}

TEST_CASE("block independence") {
    const ImageGray8 img = random_image(32, 16, 99);
    const ImageGray8 whole = compress_image(rec("T4"), img, {10});
    for (int by = 0; by < img.height; by += 8)
        for (int bx = 0; bx < img.width; bx += 8) {
            ImageGray8 tile = ImageGray8::blank(8, 8);
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) tile.at(i, j) = img.at(by + i, bx + j);
            const ImageGray8 tile_out = compress_image(rec("T4"), tile, {10});
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) CHECK(tile_out.at(i, j) == whole.at(by + i, bx + j));
        }
}

TEST_CASE("scaling order flag does not change the output") {
    const ImageGray8 img = random_image(32, 32, 1234);
    for (const char* name : {"T0", "T~3"}) {
        const ImageGray8 before = compress_image(rec(name), img, {7}, {true, true});
        const ImageGray8 after = compress_image(rec(name), img, {7}, {false, true});
        CHECK(before == after);
    }
}

TEST_CASE("level shift leaves the output unchanged while DC is retained") {
    // the shift only moves the DC coefficient, which every r >= 1 keeps
    const ImageGray8 img = random_image(32, 32, 555);
    CHECK(compress_image(rec("T4"), img, {64}, {true, false}) == img);
    const ImageGray8 shifted = compress_image(rec("DCT"), img, {2}, {true, true});
    const ImageGray8 unshifted = compress_image(rec("DCT"), img, {2}, {true, false});
    CHECK(shifted == unshifted);
}

TEST_CASE("PGM round trip and malformed input handling") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "dctlab_pgm_test";
    fs::create_directories(dir);

    const ImageGray8 img = random_image(24, 16, 31);
    write_pgm(img, dir / "img.pgm");
    CHECK(read_pgm(dir / "img.pgm") == img);

    SUBCASE("comments in the header are skipped") {
        std::ofstream out(dir / "commented.pgm", std::ios::binary);
        out << "P5\n# a comment\n2 # trailing comment\n2\n255\n";
        const char px[4] = {10, 20, 30, 40};
        out.write(px, 4);
        out.close();
        const ImageGray8 small = read_pgm(dir / "commented.pgm");
        CHECK(small.width == 2);
        CHECK(small.height == 2);
        CHECK(small.at(1, 1) == 40);
    }

    SUBCASE("wrong magic, wide maxval, truncated data") {
        std::ofstream(dir / "ascii.pgm") << "P2\n2 2\n255\n1 2 3 4\n";
        CHECK_THROWS_AS(read_pgm(dir / "ascii.pgm"), std::runtime_error);
        std::ofstream(dir / "wide.pgm") << "P5\n2 2\n65535\n";
        CHECK_THROWS_AS(read_pgm(dir / "wide.pgm"), std::runtime_error);
        std::ofstream(dir / "short.pgm") << "P5\n4 4\n255\nxx";
        CHECK_THROWS_AS(read_pgm(dir / "short.pgm"), std::runtime_error);
        CHECK_THROWS_AS(read_pgm(dir / "missing.pgm"), std::runtime_error);
    }

    fs::remove_all(dir);
}

TEST_CASE("PSNR is non-decreasing in r for the exact DCT") {
    const ImageGray8 img = random_image(32, 32, 2718);
    double prev = 0.0;
    for (int r = 1; r <= 64; r += 7) {
        const double p = psnr(img, compress_image(rec("DCT"), img, {r}));
        if (r > 1) CHECK(p >= prev - 1e-9);
        prev = p;
    }
}
