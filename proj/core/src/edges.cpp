#include <lanekit/edges.hpp>

#include <cmath>
#include <queue>
#include <stdexcept>
#include <utility>

#include <lanekit/geometry.hpp>
#include <lanekit/imaging.hpp>

namespace lanekit {

namespace {

GradientDir quantize_direction(float gx, float gy) {
    double deg = rad_to_deg(std::atan2(double(gy), double(gx)));
    if (deg < 0.0) deg += 180.0;  // fold into [0, 180)
    if (deg < 22.5) return GradientDir::Deg0;
    if (deg < 67.5) return GradientDir::Deg45;
    if (deg < 112.5) return GradientDir::Deg90;
    if (deg < 157.5) return GradientDir::Deg135;
    return GradientDir::Deg0;
}

// Axis step for each direction bin, in y-down coordinates.
std::pair<int, int> axis_step(GradientDir dir) {
    switch (dir) {
        case GradientDir::Deg0: return {1, 0};
        case GradientDir::Deg45: return {1, 1};
        case GradientDir::Deg90: return {0, 1};
        case GradientDir::Deg135: return {-1, 1};
    }
    return {1, 0};
}

}  // namespace

GradientField sobel(const ImageBuffer& image) {
    if (!image.valid() || image.channels != 1)
        throw std::invalid_argument("sobel: 1-channel image required");
    if (image.width < 3 || image.height < 3)
        throw std::invalid_argument("sobel: image must be at least 3x3");

    const int w = image.width;
    const int h = image.height;
    GradientField field;
    field.width = w;
    field.height = h;
    const std::size_t n = static_cast<std::size_t>(w) * h;
    field.gx.resize(n);
    field.gy.resize(n);
    field.magnitude.resize(n);
    field.direction_bin.resize(n);

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int tl = image.at_clamped(x - 1, y - 1);
            const int tc = image.at_clamped(x, y - 1);
            const int tr = image.at_clamped(x + 1, y - 1);
            const int ml = image.at_clamped(x - 1, y);
            const int mr = image.at_clamped(x + 1, y);
            const int bl = image.at_clamped(x - 1, y + 1);
            const int bc = image.at_clamped(x, y + 1);
            const int br = image.at_clamped(x + 1, y + 1);

            const int gx = (tr - tl) + 2 * (mr - ml) + (br - bl);
            const int gy = (bl - tl) + 2 * (bc - tc) + (br - tr);

            const std::size_t i = field.index(x, y);
            field.gx[i] = static_cast<float>(gx);
            field.gy[i] = static_cast<float>(gy);
            field.magnitude[i] =
                static_cast<float>(std::hypot(double(gx), double(gy)));
            field.direction_bin[i] = quantize_direction(field.gx[i], field.gy[i]);
        }
    }
    return field;
}

ImageBuffer non_max_suppression(const GradientField& field) {
    const int w = field.width;
    const int h = field.height;
    ImageBuffer out = ImageBuffer::create(w, h, 1);

    for (int y = 1; y < h - 1; ++y) {
        for (int x = 1; x < w - 1; ++x) {
            const std::size_t i = field.index(x, y);
            const float mag = field.magnitude[i];
            if (mag <= 0.0f) continue;
            const auto [dx, dy] = axis_step(field.direction_bin[i]);
            const float prev = field.magnitude[field.index(x - dx, y - dy)];
            const float next = field.magnitude[field.index(x + dx, y + dy)];
            // Ties thin toward the smaller coordinate along the axis.
            if (mag > prev && mag >= next)
                out.data[i] = quantize_u8(mag);
        }
    }
    return out;
}

ImageBuffer hysteresis_threshold(const ImageBuffer& nms, int low, int high) {
    if (!nms.valid() || nms.channels != 1)
        throw std::invalid_argument("hysteresis_threshold: 1-channel image required");
    if (low > high)
        throw std::invalid_argument("hysteresis_threshold: low must be <= high");

    const int w = nms.width;
    const int h = nms.height;
    ImageBuffer out = ImageBuffer::create(w, h, 1);

    // Seed the flood with strong pixels, then claim 8-connected weak ones.
    std::queue<std::pair<int, int>> work;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (nms.at(x, y) >= high) {
                out.at(x, y) = 255;
                work.push({x, y});
            }
        }
    }
    while (!work.empty()) {
        const auto [cx, cy] = work.front();
        work.pop();
        for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                if (dx == 0 && dy == 0) continue;
                const int nx = cx + dx;
                const int ny = cy + dy;
                if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                if (out.at(nx, ny)) continue;
                const int v = nms.at(nx, ny);
                if (v >= low && v < high) {
                    out.at(nx, ny) = 255;
                    work.push({nx, ny});
                }
            }
        }
    }
    return out;
}

ImageBuffer canny(const ImageBuffer& image, int low, int high, double sigma,
                  int ksize) {
    const ImageBuffer blurred = gaussian_blur(image, sigma, ksize);
    const GradientField field = sobel(blurred);
    const ImageBuffer nms = non_max_suppression(field);
    return hysteresis_threshold(nms, low, high);
}

}  // namespace lanekit
