#ifndef DCTLAB_METRICS_HPP
#define DCTLAB_METRICS_HPP

#include <string>
#include <vector>

#include "dctlab/codec.hpp"
#include "dctlab/pgm.hpp"
#include "dctlab/search.hpp"

namespace dctlab {

/// 10*log10(255^2 / MSE); +infinity when the images are identical.
/// Throws std::invalid_argument on dimension mismatch.
double psnr(const ImageGray8& a, const ImageGray8& b);

/// Mean local structural similarity, 11x11 Gaussian window (sigma 1.5),
/// K1 = 0.01, K2 = 0.03, dynamic range 255, no downsampling. Requires
/// images of at least 11x11.
double ssim(const ImageGray8& a, const ImageGray8& b);

/// 100 * |value - baseline| / |baseline|. Throws on zero baseline.
double ape(double value, double baseline);

struct QualityPoint {
    std::string transform;
    int r = 0;
    double psnr = 0.0;
    double ssim = 0.0;
    double ape_psnr = 0.0;
    double ape_ssim = 0.0;
};

struct QualityReport {
    std::vector<QualityPoint> points;  // sorted by (transform listing order, r)
    std::string to_csv() const;
    std::string to_json() const;
};

/// Mean PSNR/SSIM over the corpus per (transform, r) plus absolute percentage
/// error against the exact-DCT baseline (computed whether or not the baseline
/// is listed). Infinite PSNR values are excluded from the means.
QualityReport corpus_curves(const std::vector<const ApproximationRecord*>& transforms,
                            const std::vector<ImageGray8>& images, int r_lo, int r_hi,
                            CodecFlags flags = {}, int jobs = 1);

} // namespace dctlab

#endif
