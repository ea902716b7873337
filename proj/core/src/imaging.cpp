#include <lanekit/imaging.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <lanekit/geometry.hpp>

namespace lanekit {

namespace {

void require_rgb(const ImageBuffer& image, const char* op) {
    if (!image.valid() || image.channels != 3)
        throw std::invalid_argument(std::string(op) + ": 3-channel image required");
}

std::vector<double> sampled_gauss_kernel(double sigma, int ksize) {
    std::vector<double> kernel(ksize);
    const int center = ksize / 2;
    double sum = 0.0;
    for (int i = 0; i < ksize; ++i) {
        const double x = i - center;
        kernel[i] = std::exp(-x * x / (2.0 * sigma * sigma));
        sum += kernel[i];
    }
    for (double& k : kernel) k /= sum;
    return kernel;
}

}  // namespace

HsvImage rgb_to_hsv(const ImageBuffer& image) {
    require_rgb(image, "rgb_to_hsv");

    HsvImage out;
    out.width = image.width;
    out.height = image.height;
    const std::size_t n = static_cast<std::size_t>(image.width) * image.height;
    out.hue.resize(n);
    out.sat.resize(n);
    out.val.resize(n);

    for (std::size_t i = 0; i < n; ++i) {
        const int r = image.data[i * 3 + 0];
        const int g = image.data[i * 3 + 1];
        const int b = image.data[i * 3 + 2];
        const int maxc = std::max({r, g, b});
        const int minc = std::min({r, g, b});
        const int delta = maxc - minc;

        out.val[i] = static_cast<float>(maxc / 255.0);
        out.sat[i] = maxc == 0 ? 0.0f : static_cast<float>(double(delta) / maxc);

        double h = 0.0;
        if (delta != 0) {
            if (maxc == r)
                h = 60.0 * (g - b) / delta;
            else if (maxc == g)
                h = 60.0 * ((b - r) / double(delta) + 2.0);
            else
                h = 60.0 * ((r - g) / double(delta) + 4.0);
            if (h < 0.0) h += 360.0;
        }
        out.hue[i] = static_cast<float>(h);
    }
    return out;
}

ImageBuffer hsv_threshold(const HsvImage& image, double hue_lo, double hue_hi,
                          double sat_lo, double sat_hi, double val_lo,
                          double val_hi) {
    if (sat_lo < 0.0 || sat_hi > 1.0 || val_lo < 0.0 || val_hi > 1.0 ||
        sat_lo > sat_hi || val_lo > val_hi)
        throw std::invalid_argument("hsv_threshold: sat/val bounds must lie in [0,1]");

    auto wrap360 = [](double h) {
        h = std::fmod(h, 360.0);
        return h < 0.0 ? h + 360.0 : h;
    };
    hue_lo = wrap360(hue_lo);
    hue_hi = wrap360(hue_hi);
    const bool wraps = hue_lo > hue_hi;

    ImageBuffer out = ImageBuffer::create(image.width, image.height, 1);
    const std::size_t n = static_cast<std::size_t>(image.width) * image.height;
    for (std::size_t i = 0; i < n; ++i) {
        const double h = image.hue[i];
        const bool in_h = wraps ? (h >= hue_lo || h <= hue_hi)
                                : (h >= hue_lo && h <= hue_hi);
        const bool in_s = image.sat[i] >= sat_lo && image.sat[i] <= sat_hi;
        const bool in_v = image.val[i] >= val_lo && image.val[i] <= val_hi;
        out.data[i] = (in_h && in_s && in_v) ? 255 : 0;
    }
    return out;
}

ImageBuffer to_grayscale(const ImageBuffer& image) {
    require_rgb(image, "to_grayscale");
    ImageBuffer out = ImageBuffer::create(image.width, image.height, 1);
    const std::size_t n = static_cast<std::size_t>(image.width) * image.height;
    for (std::size_t i = 0; i < n; ++i) {
        const double luma = 0.299 * image.data[i * 3 + 0] +
                            0.587 * image.data[i * 3 + 1] +
                            0.114 * image.data[i * 3 + 2];
        out.data[i] = quantize_u8(luma);
    }
    return out;
}

ImageBuffer gaussian_blur(const ImageBuffer& image, double sigma, int ksize) {
    if (!image.valid() || image.channels != 1)
        throw std::invalid_argument("gaussian_blur: 1-channel image required");
    if (ksize < 3 || ksize % 2 == 0)
        throw std::invalid_argument("gaussian_blur: ksize must be odd and >= 3");
    if (!(sigma > 0.0))
        throw std::invalid_argument("gaussian_blur: sigma must be positive");

    const std::vector<double> kernel = sampled_gauss_kernel(sigma, ksize);
    const int radius = ksize / 2;
    const int w = image.width;
    const int h = image.height;

    // Horizontal pass, clamp-to-edge; quantize once after the vertical pass.
    std::vector<double> tmp(static_cast<std::size_t>(w) * h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int k = 0; k < ksize; ++k)
                acc += kernel[k] * image.at_clamped(x + k - radius, y);
            tmp[static_cast<std::size_t>(y) * w + x] = acc;
        }
    }

    ImageBuffer out = ImageBuffer::create(w, h, 1);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int k = 0; k < ksize; ++k) {
                const int yy = std::clamp(y + k - radius, 0, h - 1);
                acc += kernel[k] * tmp[static_cast<std::size_t>(yy) * w + x];
            }
            out.data[static_cast<std::size_t>(y) * w + x] = quantize_u8(acc);
        }
    }
    return out;
}

}  // namespace lanekit
