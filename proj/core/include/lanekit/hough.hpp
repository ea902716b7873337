#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <lanekit/geometry.hpp>
#include <lanekit/image.hpp>

namespace lanekit {

/// A detected line in normal form: rho = x cos(theta) + y sin(theta),
/// image coordinates (y down), theta in [0, pi), rho signed in pixels.
struct PolarLine {
    double rho = 0.0;
    double theta = 0.0;
    int votes = 0;
};

/// Dense (rho, theta) vote grid. rho bins are centered so rho = 0 maps to
/// the middle bin; theta bin j sits at j * theta_res.
struct HoughAccumulator {
    int rho_bins = 0;
    int theta_bins = 0;
    double rho_res = 1.0;
    double theta_res = 0.0;
    double rho_max = 0.0;
    std::vector<std::int32_t> votes;  // [rho_idx * theta_bins + theta_idx]

    int center_bin() const { return rho_bins / 2; }
    std::int32_t at(int rho_idx, int theta_idx) const {
        return votes[static_cast<std::size_t>(rho_idx) * theta_bins + theta_idx];
    }
    double rho_of(int rho_idx) const { return (rho_idx - center_bin()) * rho_res; }
    double theta_of(int theta_idx) const { return theta_idx * theta_res; }
};

/// Votes every edge pixel into the nearest rho bin for every theta bin
/// (round half away from zero). Input must be a binary map; rho_res > 0;
/// theta_res must divide pi into at least 2 bins.
HoughAccumulator hough_transform(const ImageBuffer& edges, double rho_res,
                                 double theta_res);

/// Bins with >= min_votes that are maxima of their nms_window x nms_window
/// neighborhood (ties resolve toward smaller rho index, then smaller theta
/// index), ordered by votes descending then rho then theta, truncated to
/// max_lines.
std::vector<PolarLine> extract_peaks(const HoughAccumulator& acc, int min_votes,
                                     int nms_window, int max_lines);

/// Chord of the infinite line clipped to [0, width-1] x [0, height-1].
/// Endpoint with the smaller y comes first (ties: smaller x). Empty when
/// the line misses the rectangle.
std::optional<Segment> polar_to_segment(const PolarLine& line, int width,
                                        int height);

}  // namespace lanekit
