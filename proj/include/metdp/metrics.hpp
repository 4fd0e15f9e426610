#pragma once

#include <limits>

#include "metdp/image.hpp"

namespace metdp {

/// PSNR of two identical images.
inline constexpr double kInfinitePsnr = std::numeric_limits<double>::infinity();

struct SsimParams {
    int window = 11;          // square Gaussian window side
    double sigma = 1.5;       // Gaussian standard deviation
    double k1 = 0.01;
    double k2 = 0.03;
    double dynamic_range = 255.0;
};

struct QualityReport {
    double mse = 0.0;
    double psnr = kInfinitePsnr;
    double ssim = 1.0;
    SsimParams ssim_params;
};

/// Mean squared per-pixel difference. Throws InputError on a size mismatch.
double mse(const GrayImage& a, const GrayImage& b);

/// 10 log10(255^2 / mse), or kInfinitePsnr when the images are identical.
double psnr(const GrayImage& a, const GrayImage& b);

/// Mean local SSIM over every position where the window fits inside the
/// image. Throws ConfigError when the image is smaller than the window.
double ssim(const GrayImage& a, const GrayImage& b, const SsimParams& params = {});

QualityReport quality_report(const GrayImage& original, const GrayImage& processed,
                             const SsimParams& params = {});

}  // namespace metdp
