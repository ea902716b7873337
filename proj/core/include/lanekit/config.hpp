#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <lanekit/control.hpp>
#include <lanekit/lane.hpp>
#include <lanekit/sim.hpp>

namespace lanekit {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Every tunable constant of the stack under one roof. Defaults are the
/// documented pipeline defaults; a config file and --set flags override
/// them in that order.
struct AppConfig {
    LaneConfig lane;
    ControlConfig control;
    CameraSpec camera;
    SimParams sim;

    // Road (materialized by road() below)
    std::string road_kind = "straight";  // straight | arc | polyline
    double road_length = 50.0;
    double road_radius = 10.0;  // signed, arc roads; positive turns left
    std::vector<Vec2> road_waypoints;
    double lane_width = 0.5;
    double marking_width = 0.03;
    Rgb marking_color{255, 255, 255};
    Rgb road_color{60, 60, 60};
    Rgb background_color{20, 110, 30};
    int render_noise_amp = 0;
    std::uint32_t render_noise_seed = 1;

    // Initial pose for simulate
    double init_x = 0.0;
    double init_y = 0.0;
    double init_heading_deg = 0.0;

    std::string actuator_log;  // empty = no motor-command log

    RoadSpec road() const;
    VehicleState initial_state() const;
};

/// Applies `key = value` lines (UTF-8, '#' comments) from a file.
/// Unknown keys and unparsable values raise ConfigError.
void apply_config_file(AppConfig& config, const std::string& path);

/// Applies a single key=value override.
void apply_config_kv(AppConfig& config, const std::string& key,
                     const std::string& value);

}  // namespace lanekit
