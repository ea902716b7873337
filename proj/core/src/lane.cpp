#include <lanekit/lane.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <lanekit/edges.hpp>
#include <lanekit/imaging.hpp>

namespace lanekit {

namespace {

constexpr double kParallelEps = 1e-9;
constexpr double kVerticalEps = 1e-12;

// x where the line crosses image row y; absent for near-horizontal lines.
std::optional<double> x_at_row(const PolarLine& line, double y) {
    const double c = std::cos(line.theta);
    if (std::abs(c) < kVerticalEps) return std::nullopt;
    return (line.rho - y * std::sin(line.theta)) / c;
}

bool point_in_quad(const std::array<Vec2, 4>& quad, double x, double y) {
    // Even-odd crossing test.
    bool inside = false;
    for (int i = 0, j = 3; i < 4; j = i++) {
        const Vec2& a = quad[i];
        const Vec2& b = quad[j];
        if ((a.y > y) != (b.y > y)) {
            const double xi = a.x + (y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (x < xi) inside = !inside;
        }
    }
    return inside;
}

ImageBuffer mask_to_quad(const ImageBuffer& edges, const std::array<Vec2, 4>& quad_frac) {
    std::array<Vec2, 4> quad;
    for (int i = 0; i < 4; ++i)
        quad[i] = {quad_frac[i].x * (edges.width - 1),
                   quad_frac[i].y * (edges.height - 1)};

    ImageBuffer out = edges;
    for (int y = 0; y < edges.height; ++y)
        for (int x = 0; x < edges.width; ++x)
            if (out.at(x, y) && !point_in_quad(quad, x, y)) out.at(x, y) = 0;
    return out;
}

PolarLine smooth_line(const PolarLine& measured, const PolarLine& previous,
                      double alpha) {
    PolarLine s;
    s.rho = alpha * measured.rho + (1.0 - alpha) * previous.rho;
    s.theta = alpha * measured.theta + (1.0 - alpha) * previous.theta;
    s.votes = measured.votes;
    return s;
}

LaneEstimate lost_estimate() {
    LaneEstimate est;
    est.status = LaneStatus::Lost;
    est.steering_angle = 0.0;
    return est;
}

}  // namespace

std::pair<std::vector<PolarLine>, std::vector<PolarLine>> classify_lines(
    const std::vector<PolarLine>& lines, int width, int height,
    double min_abs_slope) {
    std::vector<PolarLine> left, right;
    for (const PolarLine& line : lines) {
        const auto chord = polar_to_segment(line, width, height);
        if (!chord) continue;
        const double mid_x = 0.5 * (chord->x0 + chord->x1);

        const double s = std::sin(line.theta);
        if (std::abs(s) < kVerticalEps) {
            // Vertical: infinite slope, classify by x-intercept side alone.
            (mid_x < width / 2.0 ? left : right).push_back(line);
            continue;
        }
        const double slope = -std::cos(line.theta) / s;
        if (std::abs(slope) < min_abs_slope) continue;
        if (slope < 0.0 && mid_x < width / 2.0)
            left.push_back(line);
        else if (slope > 0.0 && mid_x >= width / 2.0)
            right.push_back(line);
    }
    return {std::move(left), std::move(right)};
}

std::optional<PolarLine> fit_lane_line(const std::vector<PolarLine>& candidates) {
    if (candidates.empty()) return std::nullopt;

    double total = 0.0;
    for (const PolarLine& c : candidates) total += c.votes;

    PolarLine fit;
    if (total <= 0.0) {
        for (const PolarLine& c : candidates) {
            fit.rho += c.rho / candidates.size();
            fit.theta += c.theta / candidates.size();
        }
        return fit;
    }
    for (const PolarLine& c : candidates) {
        fit.rho += c.votes / total * c.rho;
        fit.theta += c.votes / total * c.theta;
        fit.votes += c.votes;
    }
    return fit;
}

std::optional<Vec2> vanishing_point(const PolarLine& left, const PolarLine& right) {
    if (std::abs(std::sin(left.theta - right.theta)) <= kParallelEps)
        return std::nullopt;
    const double cl = std::cos(left.theta), sl = std::sin(left.theta);
    const double cr = std::cos(right.theta), sr = std::sin(right.theta);
    const double det = cl * sr - sl * cr;
    return Vec2{(left.rho * sr - right.rho * sl) / det,
                (cl * right.rho - cr * left.rho) / det};
}

std::optional<std::array<Vec2, 4>> compute_roi(const PolarLine& left,
                                               const PolarLine& right, Vec2 vp,
                                               int width, int height,
                                               double top_margin) {
    (void)width;
    if (!(vp.y < height)) return std::nullopt;
    const double y_bottom = height - 1;
    const double y_top = vp.y + top_margin;
    if (!(y_top < y_bottom)) return std::nullopt;

    const auto xl_b = x_at_row(left, y_bottom);
    const auto xr_b = x_at_row(right, y_bottom);
    const auto xl_t = x_at_row(left, y_top);
    const auto xr_t = x_at_row(right, y_top);
    if (!xl_b || !xr_b || !xl_t || !xr_t) return std::nullopt;
    // Swapped sides mean the lines cross below the top row.
    if (*xl_b >= *xr_b || *xl_t >= *xr_t) return std::nullopt;

    return std::array<Vec2, 4>{{{*xl_b, y_bottom},
                                {*xr_b, y_bottom},
                                {*xr_t, y_top},
                                {*xl_t, y_top}}};
}

std::optional<Segment> center_line(const PolarLine& left, const PolarLine& right,
                                   int width, int height, double lookahead_frac) {
    (void)width;
    const double y_bottom = height - 1;
    const double y_look =
        static_cast<double>(round_half_away(height * (1.0 - lookahead_frac)));

    const auto xl_b = x_at_row(left, y_bottom);
    const auto xr_b = x_at_row(right, y_bottom);
    const auto xl_l = x_at_row(left, y_look);
    const auto xr_l = x_at_row(right, y_look);
    if (!xl_b || !xr_b || !xl_l || !xr_l) return std::nullopt;

    return Segment{0.5 * (*xl_b + *xr_b), y_bottom, 0.5 * (*xl_l + *xr_l), y_look};
}

double steering_angle(const Segment& center, int width, int height) {
    if (center.y0 == center.y1)
        throw std::invalid_argument("steering_angle: center endpoints must span rows");

    const bool first_upper = center.y0 < center.y1;
    const double x_look = first_upper ? center.x0 : center.x1;
    const double y_look = first_upper ? center.y0 : center.y1;

    const double x_ref = width / 2.0;
    const double y_ref = height - 1.0;
    const double angle = rad_to_deg(std::atan2(x_look - x_ref, y_ref - y_look));
    return std::clamp(angle, -90.0, 90.0);
}

LaneEstimate detect_lane(const ImageBuffer& frame, const LaneConfig& config,
                         const std::optional<LaneEstimate>& prev) {
    if (!frame.valid() || frame.channels != 3)
        throw std::invalid_argument("detect_lane: 3-channel frame required");
    if (frame.width < 64 || frame.height < 64)
        throw std::invalid_argument("detect_lane: frame must be at least 64x64");

    const int w = frame.width;
    const int h = frame.height;

    ImageBuffer gray = to_grayscale(frame);
    if (config.mask_mode != MaskMode::Off) {
        const ImageBuffer mask = hsv_threshold(
            rgb_to_hsv(frame), config.mask_hue_lo, config.mask_hue_hi,
            config.mask_sat_lo, config.mask_sat_hi, config.mask_val_lo,
            config.mask_val_hi);
        for (std::size_t i = 0; i < gray.data.size(); ++i) {
            if (config.mask_mode == MaskMode::And)
                gray.data[i] = mask.data[i] ? gray.data[i] : 0;
            else
                gray.data[i] = std::max(gray.data[i], mask.data[i]);
        }
    }

    const ImageBuffer edge_map =
        canny(gray, config.canny_low, config.canny_high, config.blur_sigma,
              config.blur_ksize);
    const ImageBuffer roi_edges = mask_to_quad(edge_map, config.pre_roi);

    const HoughAccumulator acc =
        hough_transform(roi_edges, config.hough_rho_res, config.hough_theta_res);
    const std::vector<PolarLine> peaks = extract_peaks(
        acc, config.hough_min_votes, config.hough_nms_window, config.hough_max_lines);

    const auto [left_cands, right_cands] =
        classify_lines(peaks, w, h, config.min_abs_slope);
    const auto measured_left = fit_lane_line(left_cands);
    const auto measured_right = fit_lane_line(right_cands);

    const bool can_use_prev = prev.has_value() &&
                              prev->status != LaneStatus::Lost &&
                              prev->left.has_value() && prev->right.has_value();

    auto resolve_side = [&](const std::optional<PolarLine>& measured,
                            const std::optional<PolarLine>& previous)
        -> std::optional<PolarLine> {
        if (measured) {
            if (can_use_prev)
                return smooth_line(*measured, *previous, config.smoothing_alpha);
            return measured;
        }
        return can_use_prev ? previous : std::nullopt;
    };

    const std::optional<PolarLine> left =
        resolve_side(measured_left, can_use_prev ? prev->left : std::nullopt);
    const std::optional<PolarLine> right =
        resolve_side(measured_right, can_use_prev ? prev->right : std::nullopt);
    bool coasted = !measured_left || !measured_right;

    LaneEstimate est;
    bool have_geometry = false;
    if (left && right) {
        const auto vp = vanishing_point(*left, *right);
        if (vp) {
            const auto roi = compute_roi(*left, *right, *vp, w, h, config.roi_top_margin);
            const auto center = center_line(*left, *right, w, h, config.lookahead_frac);
            if (roi && center && center->y0 != center->y1) {
                est.left = left;
                est.right = right;
                est.vanishing_point = vp;
                est.roi = roi;
                est.center = center;
                est.steering_angle = steering_angle(*center, w, h);
                have_geometry = true;
            }
        }
    }

    if (!have_geometry) {
        // Fresh lines but broken geometry: fall back to the previous
        // estimate wholesale, if there is one to coast on.
        if (can_use_prev && prev->center && prev->vanishing_point && prev->roi) {
            est.left = prev->left;
            est.right = prev->right;
            est.center = prev->center;
            est.vanishing_point = prev->vanishing_point;
            est.roi = prev->roi;
            est.steering_angle = prev->steering_angle;
            coasted = true;
        } else {
            return lost_estimate();
        }
    }

    if (coasted) {
        const int run = (prev && prev->status == LaneStatus::Coasting)
                            ? prev->coast_frames
                            : 0;
        if (run + 1 > config.max_coast_frames) return lost_estimate();
        est.status = LaneStatus::Coasting;
        est.coast_frames = run + 1;
    } else {
        est.status = LaneStatus::Tracked;
        est.coast_frames = 0;
    }
    return est;
}

}  // namespace lanekit
