#include <lanekit/hough.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace lanekit {

HoughAccumulator hough_transform(const ImageBuffer& edges, double rho_res,
                                 double theta_res) {
    if (!edges.valid() || edges.channels != 1)
        throw std::invalid_argument("hough_transform: 1-channel image required");
    if (!is_binary(edges))
        throw std::invalid_argument("hough_transform: input must be binary");
    if (!(rho_res > 0.0))
        throw std::invalid_argument("hough_transform: rho_res must be positive");
    if (!(theta_res > 0.0))
        throw std::invalid_argument("hough_transform: theta_res must be positive");

    const int theta_bins = static_cast<int>(std::llround(kPi / theta_res));
    if (theta_bins < 2)
        throw std::invalid_argument(
            "hough_transform: theta_res must divide pi into >= 2 bins");

    HoughAccumulator acc;
    acc.rho_res = rho_res;
    acc.theta_res = theta_res;
    acc.theta_bins = theta_bins;
    acc.rho_max = std::hypot(double(edges.width - 1), double(edges.height - 1));
    acc.rho_bins = 2 * static_cast<int>(std::ceil(acc.rho_max / rho_res)) + 1;
    acc.votes.assign(static_cast<std::size_t>(acc.rho_bins) * theta_bins, 0);

    std::vector<double> cos_t(theta_bins), sin_t(theta_bins);
    for (int j = 0; j < theta_bins; ++j) {
        cos_t[j] = std::cos(j * theta_res);
        sin_t[j] = std::sin(j * theta_res);
    }

    const int center = acc.center_bin();
    for (int y = 0; y < edges.height; ++y) {
        for (int x = 0; x < edges.width; ++x) {
            if (!edges.at(x, y)) continue;
            for (int j = 0; j < theta_bins; ++j) {
                const double rho = x * cos_t[j] + y * sin_t[j];
                const int idx = center + static_cast<int>(std::llround(rho / rho_res));
                acc.votes[static_cast<std::size_t>(idx) * theta_bins + j]++;
            }
        }
    }
    return acc;
}

std::vector<PolarLine> extract_peaks(const HoughAccumulator& acc, int min_votes,
                                     int nms_window, int max_lines) {
    if (nms_window < 1 || nms_window % 2 == 0)
        throw std::invalid_argument("extract_peaks: nms_window must be odd and >= 1");

    struct Peak {
        int rho_idx;
        int theta_idx;
        std::int32_t votes;
    };
    std::vector<Peak> peaks;

    const int half = nms_window / 2;
    for (int r = 0; r < acc.rho_bins; ++r) {
        for (int t = 0; t < acc.theta_bins; ++t) {
            const std::int32_t v = acc.at(r, t);
            if (v < min_votes || v <= 0) continue;

            bool is_peak = true;
            for (int dr = -half; dr <= half && is_peak; ++dr) {
                const int r2 = r + dr;
                if (r2 < 0 || r2 >= acc.rho_bins) continue;
                for (int dt = -half; dt <= half; ++dt) {
                    const int t2 = t + dt;
                    if (t2 < 0 || t2 >= acc.theta_bins) continue;
                    if (r2 == r && t2 == t) continue;
                    const std::int32_t nv = acc.at(r2, t2);
                    // Equal votes: the smaller (rho, theta) index wins.
                    if (nv > v ||
                        (nv == v && (r2 < r || (r2 == r && t2 < t)))) {
                        is_peak = false;
                        break;
                    }
                }
            }
            if (is_peak) peaks.push_back({r, t, v});
        }
    }

    std::sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) {
        if (a.votes != b.votes) return a.votes > b.votes;
        if (a.rho_idx != b.rho_idx) return a.rho_idx < b.rho_idx;
        return a.theta_idx < b.theta_idx;
    });
    if (max_lines >= 0 && static_cast<int>(peaks.size()) > max_lines)
        peaks.resize(max_lines);

    std::vector<PolarLine> lines;
    lines.reserve(peaks.size());
    for (const Peak& p : peaks)
        lines.push_back({acc.rho_of(p.rho_idx), acc.theta_of(p.theta_idx),
                         static_cast<int>(p.votes)});
    return lines;
}

std::optional<Segment> polar_to_segment(const PolarLine& line, int width,
                                        int height) {
    // Parametric point: P(t) = (rho cos - t sin, rho sin + t cos).
    const double c = std::cos(line.theta);
    const double s = std::sin(line.theta);
    const double px = line.rho * c;
    const double py = line.rho * s;
    const double dx = -s;
    const double dy = c;

    double t0 = -std::numeric_limits<double>::infinity();
    double t1 = std::numeric_limits<double>::infinity();

    auto clip_axis = [&](double p, double d, double lo, double hi) {
        if (std::abs(d) < 1e-12) return p >= lo && p <= hi;
        double ta = (lo - p) / d;
        double tb = (hi - p) / d;
        if (ta > tb) std::swap(ta, tb);
        t0 = std::max(t0, ta);
        t1 = std::min(t1, tb);
        return true;
    };

    if (!clip_axis(px, dx, 0.0, double(width - 1))) return std::nullopt;
    if (!clip_axis(py, dy, 0.0, double(height - 1))) return std::nullopt;
    if (t0 > t1) return std::nullopt;

    auto point_at = [&](double t) {
        Vec2 p{px + t * dx, py + t * dy};
        p.x = std::clamp(p.x, 0.0, double(width - 1));
        p.y = std::clamp(p.y, 0.0, double(height - 1));
        return p;
    };
    Vec2 a = point_at(t0);
    Vec2 b = point_at(t1);
    if (a.y > b.y || (a.y == b.y && a.x > b.x)) std::swap(a, b);
    return Segment{a.x, a.y, b.x, b.y};
}

}  // namespace lanekit
