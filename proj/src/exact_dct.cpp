#include "dctlab/exact_dct.hpp"

#include <cmath>
#include <stdexcept>

namespace dctlab {

const GammaConstants& GammaConstants::get() {
    static const GammaConstants g = [] {
        GammaConstants c{};
        for (int k = 0; k < 7; ++k)
            c.gamma[k] = std::cos(2.0 * M_PI * (k + 1) / 32.0);
        return c;
    }();
    return g;
}

const Mat8d& build_exact_dct() {
    static const Mat8d c = [] {
        Mat8d m{};
        const double inv_sqrt8 = 1.0 / std::sqrt(8.0);
        for (int row = 0; row < 8; ++row) {
            const double beta = (row == 0) ? 1.0 : std::sqrt(2.0);
            for (int col = 0; col < 8; ++col)
                m[row][col] = inv_sqrt8 * beta * std::cos(M_PI * row * (2 * col + 1) / 16.0);
        }
        return m;
    }();
    return c;
}

namespace {

void check_finite(const Mat8d& m) {
    for (const auto& row : m)
        for (double v : row)
            if (!std::isfinite(v)) throw std::domain_error("non-finite block entry");
}

} // namespace

Mat8d dct_2d(const Mat8d& block) {
    check_finite(block);
    const Mat8d& c = build_exact_dct();
    return mat_mul(mat_mul(c, block), mat_transpose(c));
}

Mat8d idct_2d(const Mat8d& coeffs) {
    check_finite(coeffs);
    const Mat8d& c = build_exact_dct();
    return mat_mul(mat_mul(mat_transpose(c), coeffs), c);
}

} // namespace dctlab
