#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <lanekit/control.hpp>
#include <lanekit/geometry.hpp>
#include <lanekit/image.hpp>
#include <lanekit/lane.hpp>

namespace lanekit {

/// Planar vehicle pose in world meters; heading in radians, 0 along +x,
/// counter-clockwise positive, normalized to (-pi, pi].
struct VehicleState {
    double x = 0.0;
    double y = 0.0;
    double heading = 0.0;
};

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;
};

/// Synthetic road: a polyline or constant-curvature arc centerline with
/// lane markings centered at +-lane_width/2 lateral offset. The road
/// surface spans the markings; everything else is background.
struct RoadSpec {
    enum class Kind { Polyline, Arc };

    Kind kind = Kind::Polyline;
    std::vector<Vec2> waypoints;  // Polyline: >= 2 distinct points

    // Arc: starts at arc_start with heading arc_heading, signed curvature
    // (positive = left/CCW), arc_length meters of travel.
    Vec2 arc_start{0.0, 0.0};
    double arc_heading = 0.0;
    double arc_curvature = 0.0;
    double arc_length = 0.0;

    double lane_width = 0.5;
    double marking_width = 0.03;
    Rgb marking_color{255, 255, 255};
    Rgb road_color{60, 60, 60};
    Rgb background_color{20, 110, 30};

    // Optional uniform pixel noise, off by default; deterministic in
    // (pixel, seed).
    int noise_amp = 0;
    std::uint32_t noise_seed = 1;

    static RoadSpec straight(double length, double lane_width = 0.5);
    static RoadSpec arc(double radius, double length, double lane_width = 0.5);
};

/// Pinhole camera at the vehicle origin, cam_height meters above ground,
/// pitched down by pitch radians, facing the vehicle heading.
struct CameraSpec {
    int width = 640;
    int height = 480;
    double focal = 500.0;      // pixels
    double cam_height = 0.15;  // meters
    double pitch = 0.35;       // radians, downward positive, in (0, pi/2)
};

struct SimParams {
    double dt = 0.02;             // seconds per step
    double wheel_base = 0.12;     // meters
    double max_wheel_speed = 0.4; // meters/second at duty 1
    int steps = 500;
    bool departure_abort = false;
};

/// Ground-plane projection render: every pixel ray is intersected with
/// z = 0 and colored by its lateral distance to the road centerline.
/// Binary color decisions, no anti-aliasing.
ImageBuffer render_frame(const RoadSpec& road, const VehicleState& state,
                         const CameraSpec& cam);

/// Projects a world ground point through the camera; absent when the point
/// is at or behind the image plane. Coordinates may fall outside the
/// image bounds.
std::optional<Vec2> project_ground_point(const VehicleState& state,
                                         const CameraSpec& cam, Vec2 world);

/// Exact-arc differential-drive update over dt.
VehicleState step_vehicle(const VehicleState& state, const MotorCommand& cmd,
                          const SimParams& params);

/// Signed perpendicular distance to the nearest centerline point;
/// positive = right of the centerline relative to road direction.
double cross_track_error(const VehicleState& state, const RoadSpec& road);

/// Applies commands to a vehicle state by exact-arc integration.
class SimActuator : public Actuator {
public:
    SimActuator(VehicleState& state, const SimParams& params)
        : state_(&state), params_(params) {}
    void apply(const MotorCommand& command) override {
        *state_ = step_vehicle(*state_, command, params_);
    }

private:
    VehicleState* state_;
    SimParams params_;
};

struct RunReport {
    struct Step {
        int index = 0;
        VehicleState state;  // pose the frame was rendered from
        LaneEstimate estimate;
        MotorCommand command;
        double cte = 0.0;
    };

    std::vector<Step> steps;
    VehicleState final_state;
    double max_abs_cte = 0.0;
    double mean_abs_cte = 0.0;
    int departures = 0;  // steps with |cte| > lane_width / 2
    int steps_lost = 0;
};

/// The full perceive -> steer -> actuate loop over params.steps frames.
/// A Lost estimate issues a stop command for that step. Commands are
/// mirrored to extra_actuator when provided.
RunReport run_closed_loop(const RoadSpec& road, const CameraSpec& cam,
                          const LaneConfig& lane_cfg, const ControlConfig& ctl_cfg,
                          const SimParams& params, const VehicleState& initial,
                          Actuator* extra_actuator = nullptr);

}  // namespace lanekit
