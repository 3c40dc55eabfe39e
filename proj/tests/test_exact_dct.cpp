#include <cmath>
#include <random>

#include "doctest.h"

#include "dctlab/exact_dct.hpp"

using namespace dctlab;

namespace {

Mat8d random_block(std::mt19937& rng, double lo = -128.0, double hi = 127.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    Mat8d m{};
    for (auto& row : m)
        for (double& v : row) v = dist(rng);
    return m;
}

double frobenius(const Mat8d& m) {
    double s = 0.0;
    for (const auto& row : m)
        for (double v : row) s += v * v;
    return std::sqrt(s);
}

} // namespace

TEST_CASE("gamma constants match their nested-radical closed forms") {
    const auto& g = GammaConstants::get().gamma;
    const double s2 = std::sqrt(2.0);
    CHECK(std::abs(g[0] - std::sqrt(2.0 + std::sqrt(2.0 + s2)) / 2.0) < 1e-14);
    CHECK(std::abs(g[1] - std::sqrt(2.0 + s2) / 2.0) < 1e-14);
    CHECK(std::abs(g[2] - std::sqrt(2.0 + std::sqrt(2.0 - s2)) / 2.0) < 1e-14);
    CHECK(std::abs(g[3] - s2 / 2.0) < 1e-14);
    CHECK(std::abs(g[4] - std::sqrt(2.0 - std::sqrt(2.0 - s2)) / 2.0) < 1e-14);
    CHECK(std::abs(g[5] - std::sqrt(2.0 - s2) / 2.0) < 1e-14);
    CHECK(std::abs(g[6] - std::sqrt(2.0 - std::sqrt(2.0 + s2)) / 2.0) < 1e-14);

    CHECK(g[0] == doctest::Approx(0.980785280403230).epsilon(1e-12));
    CHECK(g[6] == doctest::Approx(0.195090322016128).epsilon(1e-12));
    for (int k = 0; k + 1 < 7; ++k) CHECK(g[k] > g[k + 1]);
}

TEST_CASE("DCT matrix structure") {
    const Mat8d& c = build_exact_dct();
    for (int j = 0; j < 8; ++j) CHECK(std::abs(c[0][j] - std::sqrt(2.0) / 4.0) < 1e-14);
    CHECK(c[1][0] == doctest::Approx(gamma_k(0) / 2.0).epsilon(1e-14));

    double largest = 0.0;
    for (const auto& row : c)
        for (double v : row) largest = std::max(largest, std::abs(v));
    CHECK(largest == doctest::Approx(gamma_k(0) / 2.0).epsilon(1e-14));

    // even rows symmetric, odd rows antisymmetric about the midpoint
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i % 2 == 0)
                CHECK(c[i][j] == doctest::Approx(c[i][7 - j]).epsilon(1e-14));
            else
                CHECK(c[i][j] == doctest::Approx(-c[i][7 - j]).epsilon(1e-14));
        }
}

TEST_CASE("orthonormality") {
    const Mat8d& c = build_exact_dct();
    const Mat8d g = mat_mul(c, mat_transpose(c));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) CHECK(std::abs(g[i][j] - (i == j ? 1.0 : 0.0)) < 1e-12);
}

TEST_CASE("2-D transform basics") {
    const Mat8d zero{};
    CHECK(mat_max_abs_diff(dct_2d(zero), zero) == 0.0);
    CHECK(mat_max_abs_diff(idct_2d(zero), zero) == 0.0);

    Mat8d constant{};
    for (auto& row : constant)
        for (double& v : row) v = 3.25;
    const Mat8d coeffs = dct_2d(constant);
    CHECK(coeffs[0][0] == doctest::Approx(8.0 * 3.25).epsilon(1e-12));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (i || j) CHECK(std::abs(coeffs[i][j]) < 1e-12);

    Mat8d delta{};
    delta[0][0] = 8.0;
    const Mat8d back = idct_2d(delta);
    for (const auto& row : back)
        for (double v : row) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("round trip and energy preservation on random blocks") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Mat8d a = random_block(rng);
        const Mat8d b = dct_2d(a);
        CHECK(mat_max_abs_diff(idct_2d(b), a) < 1e-10);
        CHECK(frobenius(b) == doctest::Approx(frobenius(a)).epsilon(1e-10));
    }
}

TEST_CASE("non-finite input is rejected") {
    Mat8d m{};
    m[3][4] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(dct_2d(m), std::domain_error);
}
