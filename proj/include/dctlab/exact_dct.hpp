#ifndef DCTLAB_EXACT_DCT_HPP
#define DCTLAB_EXACT_DCT_HPP

#include <array>

#include "dctlab/matrices.hpp"

namespace dctlab {

/// gamma_k = cos(2*pi*(k+1)/32) for k = 0..6, strictly decreasing.
/// These seven cosines are the only distinct magnitudes appearing in the
/// 8-point DCT matrix (up to the global 1/2 factor).
struct GammaConstants {
    std::array<double, 7> gamma;
    static const GammaConstants& get();
};

inline double gamma_k(int k) { return GammaConstants::get().gamma[k]; }

/// The orthonormal 8-point DCT matrix C, c[m][n] = (1/sqrt(8)) * beta_m * cos(pi*m*(2n+1)/16)
/// with beta_0 = 1 and beta_m = sqrt(2) otherwise.
const Mat8d& build_exact_dct();

/// Forward 2-D transform: C * block * C^T.
Mat8d dct_2d(const Mat8d& block);

/// Inverse 2-D transform: C^T * coeffs * C.
Mat8d idct_2d(const Mat8d& coeffs);

} // namespace dctlab

#endif
