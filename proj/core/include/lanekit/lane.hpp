#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include <lanekit/geometry.hpp>
#include <lanekit/hough.hpp>
#include <lanekit/image.hpp>

namespace lanekit {

/// How the HSV color mask combines with the grayscale frame before edge
/// detection. And: keep gray only where the mask is set. Or: force mask
/// pixels to full brightness.
enum class MaskMode { Off, And, Or };

/// Tuning surface for the whole detection pipeline. Vertices of pre_roi
/// are image fractions in [0,1]^2, ordered bottom-left, bottom-right,
/// top-right, top-left; edges outside the quad are discarded before the
/// Hough stage.
struct LaneConfig {
    // Pre-processing
    double blur_sigma = 1.0;
    int blur_ksize = 5;
    int canny_low = 50;
    int canny_high = 150;
    MaskMode mask_mode = MaskMode::Off;
    double mask_hue_lo = 0.0;
    double mask_hue_hi = 360.0;
    double mask_sat_lo = 0.0;
    double mask_sat_hi = 1.0;
    double mask_val_lo = 0.0;
    double mask_val_hi = 1.0;

    // Hough
    double hough_rho_res = 1.0;
    double hough_theta_res = kPi / 180.0;
    int hough_min_votes = 40;
    int hough_nms_window = 5;
    int hough_max_lines = 20;

    // Lane geometry
    double min_abs_slope = 0.3;
    std::array<Vec2, 4> pre_roi{{{0.0, 1.0}, {1.0, 1.0}, {1.0, 0.14}, {0.0, 0.14}}};
    double roi_top_margin = 5.0;
    double lookahead_frac = 0.35;
    double smoothing_alpha = 0.2;
    int max_coast_frames = 5;
};

enum class LaneStatus { Tracked, Coasting, Lost };

/// One frame's lane geometry. Tracked implies every optional is present;
/// Lost implies steering_angle == 0 and everything absent. steering_angle
/// is in degrees, positive = steer right, clamped to [-90, 90].
struct LaneEstimate {
    std::optional<PolarLine> left;
    std::optional<PolarLine> right;
    std::optional<Segment> center;
    std::optional<Vec2> vanishing_point;
    std::optional<std::array<Vec2, 4>> roi;
    double steering_angle = 0.0;
    LaneStatus status = LaneStatus::Lost;
    int coast_frames = 0;  // consecutive frames served from the previous estimate
};

/// Splits candidate lines into left/right lane sets. Slope is
/// -cos(theta)/sin(theta) in y-down coordinates; near-horizontal lines
/// (|slope| < min_abs_slope) are discarded, vertical lines classify purely
/// by which half of the image their chord occupies.
std::pair<std::vector<PolarLine>, std::vector<PolarLine>> classify_lines(
    const std::vector<PolarLine>& lines, int width, int height,
    double min_abs_slope);

/// Votes-weighted mean of (rho, theta); vote count is the sum. Absent on
/// empty input.
std::optional<PolarLine> fit_lane_line(const std::vector<PolarLine>& candidates);

/// Intersection of the two lines, absent when they are (near-)parallel
/// (|sin(thetaL - thetaR)| <= 1e-9).
std::optional<Vec2> vanishing_point(const PolarLine& left, const PolarLine& right);

/// Detected-lane trapezoid between the bottom row and the row
/// top_margin px below the vanishing point, vertices ordered bottom-left,
/// bottom-right, top-right, top-left. Absent on swapped/degenerate
/// geometry.
std::optional<std::array<Vec2, 4>> compute_roi(const PolarLine& left,
                                               const PolarLine& right, Vec2 vp,
                                               int width, int height,
                                               double top_margin = 5.0);

/// Virtual center line: midpoint of the lane-line crossings of the bottom
/// row, to the midpoint of their crossings of the lookahead row
/// round(height * (1 - lookahead_frac)).
std::optional<Segment> center_line(const PolarLine& left, const PolarLine& right,
                                   int width, int height, double lookahead_frac);

/// Bearing in degrees from the vehicle reference point (width/2, height-1)
/// to the center line's upper endpoint; positive = target right of center.
/// Clamped to [-90, 90]. Rejects segments with zero row span.
double steering_angle(const Segment& center, int width, int height);

/// Full per-frame detection: grayscale (+ optional color mask) -> Canny ->
/// pre-ROI masking -> Hough -> left/right classification and fit -> lane
/// geometry -> steering angle; exponential smoothing and bounded coasting
/// against the previous estimate. Never throws on valid frames (>= 64x64,
/// 3 channels); degradation is expressed through status.
LaneEstimate detect_lane(const ImageBuffer& frame, const LaneConfig& config,
                         const std::optional<LaneEstimate>& prev);

}  // namespace lanekit
