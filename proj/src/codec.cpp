#include "dctlab/codec.hpp"

#include <cmath>
#include <stdexcept>

#include "dctlab/exact_dct.hpp"
#include "dctlab/fast_transform.hpp"

namespace dctlab {

const std::array<int, 64>& zigzag_order() {
    static const std::array<int, 64> order = [] {
        std::array<int, 64> o{};
        int pos = 0;
        for (int diag = 0; diag < 15; ++diag) {
            // even diagonals run bottom-left to top-right
            if (diag % 2 == 0) {
                for (int row = std::min(diag, 7); row >= std::max(0, diag - 7); --row)
                    o[pos++] = row * 8 + (diag - row);
            } else {
                for (int row = std::max(0, diag - 7); row <= std::min(diag, 7); ++row)
                    o[pos++] = row * 8 + (diag - row);
            }
        }
        return o;
    }();
    return order;
}

namespace {

void require_usable(const ApproximationRecord& record) {
    if (!record.usable_in_codec())
        throw std::invalid_argument("transform '" + record.name +
                                    "' has no inverse and cannot be used in the codec");
}

Mat8d apply_plan_2d(const TransformPlan& plan, const Mat8d& block) {
    Mat8d tmp{};  // T * block, plan applied per column
    for (int col = 0; col < 8; ++col) {
        std::array<double, 8> v{};
        for (int row = 0; row < 8; ++row) v[row] = block[row][col];
        const auto out = plan.apply(v);
        for (int row = 0; row < 8; ++row) tmp[row][col] = out[row];
    }
    Mat8d res{};  // (T * block) * T^T, plan applied per row
    for (int row = 0; row < 8; ++row) {
        const auto out = plan.apply(tmp[row]);
        for (int col = 0; col < 8; ++col) res[row][col] = out[col];
    }
    return res;
}

void scale_entrywise(Mat8d& m, const std::array<double, 8>& d) {
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) m[i][j] *= d[i] * d[j];
}

} // namespace

Mat8d forward_block(const ApproximationRecord& record, const Mat8d& block) {
    require_usable(record);
    if (record.is_exact_dct()) return dct_2d(block);
    const TransformPlan plan = build_plan(record);
    Mat8d coeffs = apply_plan_2d(plan, block);
    scale_entrywise(coeffs, record.scaling->d);
    return coeffs;
}

Mat8d inverse_block(const ApproximationRecord& record, const Mat8d& coeffs) {
    require_usable(record);
    if (record.is_exact_dct()) return idct_2d(coeffs);

    if (record.classification == Classification::Orthogonal) {
        // A = (S*T)^T * B * (S*T) = T^T * (S*B*S) * T
        Mat8d scaled = coeffs;
        scale_entrywise(scaled, record.scaling->d);
        const Mat8d t = record.matrix.to_real();
        return mat_mul(mat_mul(mat_transpose(t), scaled), t);
    }

    // near-orthogonal: A = (T^-1 S^-1) B (T^-1 S^-1)^T with T^-1 = E * diag
    const InverseFactorization& inv = *record.inverse;
    std::array<double, 8> w{};
    for (int i = 0; i < 8; ++i)
        w[i] = inv.column_scale[i].to_double() * std::sqrt(static_cast<double>(record.diag_gram[i]));
    Mat8d scaled = coeffs;
    scale_entrywise(scaled, w);
    const Mat8d e = inv.integer_part.to_real();
    return mat_mul(mat_mul(e, scaled), mat_transpose(e));
}

ImageGray8 compress_image(const ApproximationRecord& record, const ImageGray8& image,
                          RetentionSpec spec, CodecFlags flags) {
    require_usable(record);
    if (image.width % 8 != 0 || image.height % 8 != 0)
        throw std::invalid_argument("image dimensions must be multiples of 8");
    if (spec.r < 1 || spec.r > 64) throw std::invalid_argument("retention r must lie in 1..64");

    const std::array<int, 64>& zz = zigzag_order();
    ImageGray8 out = ImageGray8::blank(image.width, image.height);

    const bool exact = record.is_exact_dct();
    TransformPlan plan;
    if (!exact) plan = build_plan(record);

    const double shift = flags.level_shift ? 128.0 : 0.0;
    for (int by = 0; by < image.height; by += 8) {
        for (int bx = 0; bx < image.width; bx += 8) {
            Mat8d block{};
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j)
                    block[i][j] = static_cast<double>(image.at(by + i, bx + j)) - shift;

            Mat8d coeffs = exact ? dct_2d(block) : apply_plan_2d(plan, block);
            if (flags.scale_before_retention) {
                if (!exact) scale_entrywise(coeffs, record.scaling->d);
                for (int pos = spec.r; pos < 64; ++pos) coeffs[zz[pos] / 8][zz[pos] % 8] = 0.0;
            } else {
                // retention on unscaled coefficients; the zeroed positions are
                // fixed, so the result matches the default order
                for (int pos = spec.r; pos < 64; ++pos) coeffs[zz[pos] / 8][zz[pos] % 8] = 0.0;
                if (!exact) scale_entrywise(coeffs, record.scaling->d);
            }

            const Mat8d rec = inverse_block(record, coeffs);
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) {
                    const double v = rec[i][j] + shift;
                    const double rounded = std::floor(std::abs(v) + 0.5) * (v < 0 ? -1.0 : 1.0);
                    const double clamped = std::min(255.0, std::max(0.0, rounded));
                    out.at(by + i, bx + j) = static_cast<std::uint8_t>(clamped);
                }
        }
    }
    return out;
}

} // namespace dctlab
