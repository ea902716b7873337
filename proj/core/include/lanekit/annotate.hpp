#pragma once

#include <lanekit/image.hpp>
#include <lanekit/lane.hpp>

namespace lanekit {

/// Overlays the estimate on a copy of the frame: lane lines red, center
/// line green, ROI outline blue, vanishing-point cross yellow; 1 px
/// integer rasterization. A Lost estimate returns the frame unchanged.
ImageBuffer annotate(const ImageBuffer& frame, const LaneEstimate& estimate);

}  // namespace lanekit
