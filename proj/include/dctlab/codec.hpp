#ifndef DCTLAB_CODEC_HPP
#define DCTLAB_CODEC_HPP

#include <array>

#include "dctlab/pgm.hpp"
#include "dctlab/search.hpp"

namespace dctlab {

/// Number of leading zigzag coefficients kept per block (1..64).
struct RetentionSpec {
    int r = 64;
};

struct CodecFlags {
    /// Apply the orthonormalizing scale factors before zeroing coefficients.
    /// For fixed-position retention the two orders give identical output
    /// (scaling is entrywise); the flag is kept so the experiment pipeline
    /// can demonstrate that.
    bool scale_before_retention = true;
    /// Subtract 128 before the forward transform and add it back after the
    /// inverse (JPEG convention).
    bool level_shift = true;
};

/// Standard zigzag scan: position -> linear index (row*8 + col) starting at
/// the DC corner.
const std::array<int, 64>& zigzag_order();

/// Forward 2-D block transform with the record's orthonormalizing (or
/// near-orthogonal) diagonal absorbed: S*T * block * (S*T)^T.
/// Throws std::invalid_argument for records without an inverse (degenerate).
Mat8d forward_block(const ApproximationRecord& record, const Mat8d& block);

/// Exact inverse of forward_block. Non-orthogonal records invert through the
/// stored exact factorization T^-1 = E * diag, keeping the heavy matrix
/// integer.
Mat8d inverse_block(const ApproximationRecord& record, const Mat8d& coeffs);

/// JPEG-like pipeline: per 8x8 block, level shift by -128, forward
/// transform, zero all coefficients at zigzag position >= r, inverse
/// transform, shift back, clamp to [0,255] and round.
/// Throws std::invalid_argument when dimensions are not multiples of 8.
ImageGray8 compress_image(const ApproximationRecord& record, const ImageGray8& image,
                          RetentionSpec spec, CodecFlags flags = {});

} // namespace dctlab

#endif
