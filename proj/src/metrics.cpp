#include "metdp/metrics.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "metdp/errors.hpp"

namespace metdp {
namespace {

void check_same_size(const GrayImage& a, const GrayImage& b) {
    if (a.width() != b.width() || a.height() != b.height()) {
        throw InputError("image sizes differ: " + std::to_string(a.width()) + "x" +
                         std::to_string(a.height()) + " vs " + std::to_string(b.width()) + "x" +
                         std::to_string(b.height()));
    }
}

std::vector<double> gaussian_kernel(int size, double sigma) {
    std::vector<double> k(static_cast<std::size_t>(size));
    const double centre = (size - 1) / 2.0;
    double sum = 0.0;
    for (int i = 0; i < size; ++i) {
        const double d = i - centre;
        k[static_cast<std::size_t>(i)] = std::exp(-d * d / (2.0 * sigma * sigma));
        sum += k[static_cast<std::size_t>(i)];
    }
    for (auto& v : k) {
        v /= sum;
    }
    return k;
}

// Separable "valid" filtering: output is (w - size + 1) x (h - size + 1).
std::vector<double> filter_valid(const std::vector<double>& src, std::size_t w, std::size_t h,
                                 const std::vector<double>& kernel) {
    const std::size_t size = kernel.size();
    const std::size_t ow = w - size + 1;
    const std::size_t oh = h - size + 1;
    std::vector<double> rows(ow * h);
    for (std::size_t y = 0; y < h; ++y) {
        const double* in = src.data() + y * w;
        for (std::size_t x = 0; x < ow; ++x) {
            double acc = 0.0;
            for (std::size_t k = 0; k < size; ++k) {
                acc += kernel[k] * in[x + k];
            }
            rows[y * ow + x] = acc;
        }
    }
    std::vector<double> out(ow * oh);
    for (std::size_t y = 0; y < oh; ++y) {
        for (std::size_t x = 0; x < ow; ++x) {
            double acc = 0.0;
            for (std::size_t k = 0; k < size; ++k) {
                acc += kernel[k] * rows[(y + k) * ow + x];
            }
            out[y * ow + x] = acc;
        }
    }
    return out;
}

}  // namespace

double mse(const GrayImage& a, const GrayImage& b) {
    check_same_size(a, b);
    std::uint64_t sum = 0;
    const auto pa = a.pixels();
    const auto pb = b.pixels();
    for (std::size_t i = 0; i < pa.size(); ++i) {
        const int d = static_cast<int>(pa[i]) - static_cast<int>(pb[i]);
        sum += static_cast<std::uint64_t>(d * d);
    }
    return static_cast<double>(sum) / static_cast<double>(pa.size());
}

double psnr(const GrayImage& a, const GrayImage& b) {
    const double e = mse(a, b);
    if (e == 0.0) {
        return kInfinitePsnr;
    }
    return 10.0 * std::log10(255.0 * 255.0 / e);
}

double ssim(const GrayImage& a, const GrayImage& b, const SsimParams& params) {
    check_same_size(a, b);
    if (params.window < 1 || params.sigma <= 0.0) {
        throw ConfigError("SSIM window must be positive with sigma > 0");
    }
    const auto window = static_cast<std::size_t>(params.window);
    if (a.width() < window || a.height() < window) {
        throw ConfigError("image " + std::to_string(a.width()) + "x" + std::to_string(a.height()) +
                          " is smaller than the " + std::to_string(window) + "x" +
                          std::to_string(window) + " SSIM window; use a smaller window");
    }

    const std::size_t w = a.width();
    const std::size_t h = a.height();
    const std::size_t n = w * h;
    std::vector<double> x(n), y(n), xx(n), yy(n), xy(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = a.pixels()[i];
        y[i] = b.pixels()[i];
        xx[i] = x[i] * x[i];
        yy[i] = y[i] * y[i];
        xy[i] = x[i] * y[i];
    }
    const auto kernel = gaussian_kernel(params.window, params.sigma);
    const auto mx = filter_valid(x, w, h, kernel);
    const auto my = filter_valid(y, w, h, kernel);
    const auto sxx = filter_valid(xx, w, h, kernel);
    const auto syy = filter_valid(yy, w, h, kernel);
    const auto sxy = filter_valid(xy, w, h, kernel);

    const double c1 = (params.k1 * params.dynamic_range) * (params.k1 * params.dynamic_range);
    const double c2 = (params.k2 * params.dynamic_range) * (params.k2 * params.dynamic_range);
    double total = 0.0;
    for (std::size_t i = 0; i < mx.size(); ++i) {
        const double mu_xy = mx[i] * my[i];
        const double var_x = sxx[i] - mx[i] * mx[i];
        const double var_y = syy[i] - my[i] * my[i];
        const double cov = sxy[i] - mu_xy;
        const double num = (2.0 * mu_xy + c1) * (2.0 * cov + c2);
        const double den = (mx[i] * mx[i] + my[i] * my[i] + c1) * (var_x + var_y + c2);
        total += num / den;
    }
    return total / static_cast<double>(mx.size());
}

QualityReport quality_report(const GrayImage& original, const GrayImage& processed,
                             const SsimParams& params) {
    QualityReport r;
    r.mse = mse(original, processed);
    r.psnr = r.mse == 0.0 ? kInfinitePsnr : 10.0 * std::log10(255.0 * 255.0 / r.mse);
    r.ssim = ssim(original, processed, params);
    r.ssim_params = params;
    return r;
}

}  // namespace metdp
