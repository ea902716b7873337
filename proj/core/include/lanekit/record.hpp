#pragma once

#include <string>

#include <lanekit/lane.hpp>
#include <lanekit/sim.hpp>

namespace lanekit {

/// One detection result as a single-line JSON object. Null-ness of the
/// geometry fields mirrors the estimate's optionals. Angles carry 3
/// fractional digits, image coordinates 2.
std::string lane_record_line(int frame_index, const LaneEstimate& estimate);

/// Lane record plus pose (x, y, heading), wheel duties (4 fractional
/// digits) and cross-track error for one closed-loop step.
std::string run_step_line(const RunReport::Step& step);

/// Trailing summary object for a closed-loop report.
std::string run_summary_line(const RunReport& report);

}  // namespace lanekit
