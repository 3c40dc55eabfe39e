#include "dctlab/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace dctlab {

namespace {

void require_same_size(const ImageGray8& a, const ImageGray8& b) {
    if (a.width != b.width || a.height != b.height)
        throw std::invalid_argument("image dimension mismatch");
}

} // namespace

double psnr(const ImageGray8& a, const ImageGray8& b) {
    require_same_size(a, b);
    if (a.pixels.empty()) throw std::invalid_argument("empty image");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.pixels.size(); ++i) {
        const double d = static_cast<double>(a.pixels[i]) - static_cast<double>(b.pixels[i]);
        sum += d * d;
    }
    if (sum == 0.0) return std::numeric_limits<double>::infinity();
    const double mse = sum / static_cast<double>(a.pixels.size());
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

namespace {

constexpr int kWindow = 11;
constexpr double kSigma = 1.5;

const std::array<double, kWindow>& gaussian_taps() {
    static const std::array<double, kWindow> taps = [] {
        std::array<double, kWindow> t{};
        double sum = 0.0;
        for (int i = 0; i < kWindow; ++i) {
            const double x = i - (kWindow - 1) / 2.0;
            t[i] = std::exp(-x * x / (2.0 * kSigma * kSigma));
            sum += t[i];
        }
        for (double& v : t) v /= sum;
        return t;
    }();
    return taps;
}

// separable Gaussian filter, valid region only: output is (h-10) x (w-10)
std::vector<double> filter_valid(const std::vector<double>& img, int w, int h, int& ow, int& oh) {
    const auto& taps = gaussian_taps();
    ow = w - kWindow + 1;
    oh = h - kWindow + 1;
    std::vector<double> horiz(static_cast<std::size_t>(ow) * h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < ow; ++x) {
            double s = 0.0;
            for (int t = 0; t < kWindow; ++t) s += taps[t] * img[static_cast<std::size_t>(y) * w + x + t];
            horiz[static_cast<std::size_t>(y) * ow + x] = s;
        }
    std::vector<double> out(static_cast<std::size_t>(ow) * oh);
    for (int y = 0; y < oh; ++y)
        for (int x = 0; x < ow; ++x) {
            double s = 0.0;
            for (int t = 0; t < kWindow; ++t) s += taps[t] * horiz[static_cast<std::size_t>(y + t) * ow + x];
            out[static_cast<std::size_t>(y) * ow + x] = s;
        }
    return out;
}

} // namespace

double ssim(const ImageGray8& a, const ImageGray8& b) {
    require_same_size(a, b);
    if (a.width < kWindow || a.height < kWindow)
        throw std::invalid_argument("images too small for the 11x11 window");

    const int w = a.width, h = a.height;
    const std::size_t n = a.pixels.size();
    std::vector<double> fa(n), fb(n), faa(n), fbb(n), fab(n);
    for (std::size_t i = 0; i < n; ++i) {
        fa[i] = a.pixels[i];
        fb[i] = b.pixels[i];
        faa[i] = fa[i] * fa[i];
        fbb[i] = fb[i] * fb[i];
        fab[i] = fa[i] * fb[i];
    }
    int ow, oh;
    const auto mu_a = filter_valid(fa, w, h, ow, oh);
    const auto mu_b = filter_valid(fb, w, h, ow, oh);
    const auto s_aa = filter_valid(faa, w, h, ow, oh);
    const auto s_bb = filter_valid(fbb, w, h, ow, oh);
    const auto s_ab = filter_valid(fab, w, h, ow, oh);

    constexpr double kL = 255.0;
    constexpr double c1 = (0.01 * kL) * (0.01 * kL);
    constexpr double c2 = (0.03 * kL) * (0.03 * kL);

    double total = 0.0;
    const std::size_t count = mu_a.size();
    for (std::size_t i = 0; i < count; ++i) {
        const double ma = mu_a[i], mb = mu_b[i];
        const double va = s_aa[i] - ma * ma;
        const double vb = s_bb[i] - mb * mb;
        const double cov = s_ab[i] - ma * mb;
        total += ((2.0 * ma * mb + c1) * (2.0 * cov + c2)) /
                 ((ma * ma + mb * mb + c1) * (va + vb + c2));
    }
    return total / static_cast<double>(count);
}

double ape(double value, double baseline) {
    if (baseline == 0.0) throw std::invalid_argument("zero baseline for percentage error");
    return 100.0 * std::abs(value - baseline) / std::abs(baseline);
}

std::string QualityReport::to_csv() const {
    std::string out = "transform,r,psnr,ssim,ape_psnr,ape_ssim\n";
    char buf[160];
    for (const QualityPoint& p : points) {
        std::snprintf(buf, sizeof buf, "%s,%d,%.6f,%.6f,%.6f,%.6f\n", p.transform.c_str(), p.r,
                      p.psnr, p.ssim, p.ape_psnr, p.ape_ssim);
        out += buf;
    }
    return out;
}

std::string QualityReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const QualityPoint& p : points)
        arr.push_back({{"transform", p.transform},
                       {"r", p.r},
                       {"psnr", p.psnr},
                       {"ssim", p.ssim},
                       {"ape_psnr", p.ape_psnr},
                       {"ape_ssim", p.ape_ssim}});
    return arr.dump(2);
}

QualityReport corpus_curves(const std::vector<const ApproximationRecord*>& transforms,
                            const std::vector<ImageGray8>& images, int r_lo, int r_hi,
                            CodecFlags flags, int jobs) {
    if (images.empty()) throw std::invalid_argument("empty corpus");
    if (r_lo < 1 || r_hi > 64 || r_lo > r_hi) throw std::invalid_argument("bad retention range");

    const ApproximationRecord* baseline = nullptr;
    for (const ApproximationRecord* t : transforms)
        if (t->is_exact_dct()) baseline = t;
    ApproximationRecord synthesized_baseline;
    if (!baseline) {
        synthesized_baseline.name = "DCT";
        synthesized_baseline.classification = Classification::ExactBaseline;
        baseline = &synthesized_baseline;
    }
    std::vector<const ApproximationRecord*> all = transforms;
    if (baseline == &synthesized_baseline) all.push_back(baseline);

    const int n_r = r_hi - r_lo + 1;
    // mean psnr/ssim per (transform, r); infinite psnr excluded from means
    struct Cell {
        double psnr_sum = 0.0;
        int psnr_n = 0;
        double ssim_sum = 0.0;
        int ssim_n = 0;
    };
    std::vector<std::vector<Cell>> cells(all.size(), std::vector<Cell>(static_cast<std::size_t>(n_r)));

    const int n_jobs = std::max(1, jobs);
    std::vector<std::vector<std::vector<Cell>>> partial(
        static_cast<std::size_t>(n_jobs),
        std::vector<std::vector<Cell>>(all.size(), std::vector<Cell>(static_cast<std::size_t>(n_r))));

    auto worker = [&](int job) {
        for (std::size_t img = job; img < images.size(); img += static_cast<std::size_t>(n_jobs)) {
            for (std::size_t t = 0; t < all.size(); ++t) {
                for (int r = r_lo; r <= r_hi; ++r) {
                    const ImageGray8 compressed = compress_image(*all[t], images[img], {r}, flags);
                    const double p = psnr(images[img], compressed);
                    const double s = ssim(images[img], compressed);
                    Cell& c = partial[static_cast<std::size_t>(job)][t][static_cast<std::size_t>(r - r_lo)];
                    if (std::isfinite(p)) {
                        c.psnr_sum += p;
                        ++c.psnr_n;
                    }
                    c.ssim_sum += s;
                    ++c.ssim_n;
                }
            }
        }
    };
    if (n_jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < n_jobs; ++j) pool.emplace_back(worker, j);
        for (std::thread& th : pool) th.join();
    }
    for (int j = 0; j < n_jobs; ++j)
        for (std::size_t t = 0; t < all.size(); ++t)
            for (int k = 0; k < n_r; ++k) {
                cells[t][static_cast<std::size_t>(k)].psnr_sum += partial[j][t][static_cast<std::size_t>(k)].psnr_sum;
                cells[t][static_cast<std::size_t>(k)].psnr_n += partial[j][t][static_cast<std::size_t>(k)].psnr_n;
                cells[t][static_cast<std::size_t>(k)].ssim_sum += partial[j][t][static_cast<std::size_t>(k)].ssim_sum;
                cells[t][static_cast<std::size_t>(k)].ssim_n += partial[j][t][static_cast<std::size_t>(k)].ssim_n;
            }

    auto mean_of = [](double sum, int n) {
        return n > 0 ? sum / n : std::numeric_limits<double>::infinity();
    };

    std::size_t baseline_idx = 0;
    for (std::size_t t = 0; t < all.size(); ++t)
        if (all[t] == baseline) baseline_idx = t;

    QualityReport report;
    for (std::size_t t = 0; t < all.size(); ++t) {
        if (all[t] == &synthesized_baseline) continue;  // baseline added only for reference
        for (int k = 0; k < n_r; ++k) {
            const Cell& c = cells[t][static_cast<std::size_t>(k)];
            const Cell& b = cells[baseline_idx][static_cast<std::size_t>(k)];
            QualityPoint p;
            p.transform = all[t]->name;
            p.r = r_lo + k;
            p.psnr = mean_of(c.psnr_sum, c.psnr_n);
            p.ssim = mean_of(c.ssim_sum, c.ssim_n);
            const double bp = mean_of(b.psnr_sum, b.psnr_n);
            const double bs = mean_of(b.ssim_sum, b.ssim_n);
            p.ape_psnr = (std::isfinite(p.psnr) && std::isfinite(bp)) ? ape(p.psnr, bp) : 0.0;
            p.ape_ssim = std::isfinite(bs) ? ape(p.ssim, bs) : 0.0;
            report.points.push_back(std::move(p));
        }
    }
    return report;
}

} // namespace dctlab
