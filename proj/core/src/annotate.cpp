#include <lanekit/annotate.hpp>

#include <algorithm>
#include <cmath>

#include <lanekit/geometry.hpp>
#include <lanekit/hough.hpp>

namespace lanekit {

namespace {

struct Color {
    std::uint8_t r, g, b;
};

constexpr Color kLaneColor{255, 0, 0};
constexpr Color kCenterColor{0, 255, 0};
constexpr Color kRoiColor{0, 0, 255};
constexpr Color kVpColor{255, 255, 0};

void put_pixel(ImageBuffer& img, int x, int y, Color c) {
    if (x < 0 || x >= img.width || y < 0 || y >= img.height) return;
    const std::size_t i = img.index(x, y);
    img.data[i + 0] = c.r;
    img.data[i + 1] = c.g;
    img.data[i + 2] = c.b;
}

// Clip to the image rectangle, then Bresenham on rounded endpoints.
void draw_segment(ImageBuffer& img, Vec2 a, Vec2 b, Color c) {
    double t0 = 0.0, t1 = 1.0;
    const double dx = b.x - a.x, dy = b.y - a.y;
    auto clip = [&](double p, double d, double lo, double hi) {
        if (std::abs(d) < 1e-12) return p >= lo && p <= hi;
        double ta = (lo - p) / d, tb = (hi - p) / d;
        if (ta > tb) std::swap(ta, tb);
        t0 = std::max(t0, ta);
        t1 = std::min(t1, tb);
        return true;
    };
    if (!clip(a.x, dx, 0.0, img.width - 1.0)) return;
    if (!clip(a.y, dy, 0.0, img.height - 1.0)) return;
    if (t0 > t1) return;

    int x0 = static_cast<int>(std::llround(a.x + t0 * dx));
    int y0 = static_cast<int>(std::llround(a.y + t0 * dy));
    const int x1 = static_cast<int>(std::llround(a.x + t1 * dx));
    const int y1 = static_cast<int>(std::llround(a.y + t1 * dy));

    const int adx = std::abs(x1 - x0), ady = -std::abs(y1 - y0);
    const int sx = x0 < x1 ? 1 : -1, sy = y0 < y1 ? 1 : -1;
    int err = adx + ady;
    for (;;) {
        put_pixel(img, x0, y0, c);
        if (x0 == x1 && y0 == y1) break;
        const int e2 = 2 * err;
        if (e2 >= ady) {
            err += ady;
            x0 += sx;
        }
        if (e2 <= adx) {
            err += adx;
            y0 += sy;
        }
    }
}

void draw_polar(ImageBuffer& img, const PolarLine& line, Color c) {
    if (auto seg = polar_to_segment(line, img.width, img.height))
        draw_segment(img, seg->a(), seg->b(), c);
}

}  // namespace

ImageBuffer annotate(const ImageBuffer& frame, const LaneEstimate& estimate) {
    ImageBuffer out = frame;
    if (estimate.status == LaneStatus::Lost) return out;

    if (estimate.roi) {
        const auto& q = *estimate.roi;
        for (int i = 0; i < 4; ++i)
            draw_segment(out, q[i], q[(i + 1) % 4], kRoiColor);
    }
    if (estimate.left) draw_polar(out, *estimate.left, kLaneColor);
    if (estimate.right) draw_polar(out, *estimate.right, kLaneColor);
    if (estimate.center)
        draw_segment(out, estimate.center->a(), estimate.center->b(), kCenterColor);
    if (estimate.vanishing_point) {
        const Vec2 vp = *estimate.vanishing_point;
        draw_segment(out, {vp.x - 4, vp.y}, {vp.x + 4, vp.y}, kVpColor);
        draw_segment(out, {vp.x, vp.y - 4}, {vp.x, vp.y + 4}, kVpColor);
    }
    return out;
}

}  // namespace lanekit
