#include <lanekit/config.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace lanekit {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad numeric value for '" + key + "': " + value);
    }
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer value for '" + key + "': " + value);
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "1" || value == "true" || value == "on") return true;
    if (value == "0" || value == "false" || value == "off") return false;
    throw ConfigError("config: bad boolean value for '" + key + "': " + value);
}

std::vector<double> parse_numbers(const std::string& key, const std::string& value,
                                  std::size_t expect) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(key, trim(item)));
    if (expect != 0 && out.size() != expect)
        throw ConfigError("config: '" + key + "' expects " + std::to_string(expect) +
                          " comma-separated numbers");
    return out;
}

Rgb parse_color(const std::string& key, const std::string& value) {
    const auto nums = parse_numbers(key, value, 3);
    for (double v : nums)
        if (v < 0 || v > 255)
            throw ConfigError("config: color channel out of range for '" + key + "'");
    return Rgb{static_cast<std::uint8_t>(nums[0]), static_cast<std::uint8_t>(nums[1]),
               static_cast<std::uint8_t>(nums[2])};
}

// "x,y; x,y; ..." waypoint list.
std::vector<Vec2> parse_waypoints(const std::string& key, const std::string& value) {
    std::vector<Vec2> pts;
    std::stringstream ss(value);
    std::string pair;
    while (std::getline(ss, pair, ';')) {
        pair = trim(pair);
        if (pair.empty()) continue;
        const auto nums = parse_numbers(key, pair, 2);
        pts.push_back({nums[0], nums[1]});
    }
    if (pts.size() < 2)
        throw ConfigError("config: '" + key + "' needs at least 2 waypoints");
    return pts;
}

MaskMode parse_mask_mode(const std::string& value) {
    if (value == "off") return MaskMode::Off;
    if (value == "and") return MaskMode::And;
    if (value == "or") return MaskMode::Or;
    throw ConfigError("config: mask_mode must be off, and, or");
}

using Setter = std::function<void(AppConfig&, const std::string&, const std::string&)>;

const std::unordered_map<std::string, Setter>& setters() {
    static const std::unordered_map<std::string, Setter> table = {
        // Pre-processing
        {"blur_sigma", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.lane.blur_sigma = parse_double(k, v);
         }},
        {"blur_ksize", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.lane.blur_ksize = parse_int(k, v);
         }},
        {"canny_low", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.lane.canny_low = parse_int(k, v);
         }},
        {"canny_high", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.lane.canny_high = parse_int(k, v);
         }},
        {"mask_mode", [](AppConfig& c, const std::string&, const std::string& v) {
             c.lane.mask_mode = parse_mask_mode(v);
         }},
        {"mask_hue_lo", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.lane.mask_hue_lo = parse_double(k, v);
         }},
        {"mask_hue_hi", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.lane.mask_hue_hi = parse_double(k, v);
         }},
        {"mask_sat_lo", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.lane.mask_sat_lo = parse_double(k, v);
         }},
        {"mask_sat_hi", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.lane.mask_sat_hi = parse_double(k, v);
         }},
        {"mask_val_lo", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.lane.mask_val_lo = parse_double(k, v);
         }},
        {"mask_val_hi", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.lane.mask_val_hi = parse_double(k, v);
         }},
        // Hough
        {"hough_rho_res", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.lane.hough_rho_res = parse_double(k, v);
         }},
        {"hough_theta_res_deg",
         [](AppConfig& c, const std::string& k, const std::string& v) {
             c.lane.hough_theta_res = deg_to_rad(parse_double(k, v));
         }},
        {"hough_min_votes", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.lane.hough_min_votes = parse_int(k, v);
         }},
        {"hough_nms_window", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.lane.hough_nms_window = parse_int(k, v);
         }},
        {"hough_max_lines", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.lane.hough_max_lines = parse_int(k, v);
         }},
        // Lane geometry
        {"min_abs_slope", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.lane.min_abs_slope = parse_double(k, v);
         }},
        {"pre_roi", [](AppConfig& c, const std::string& k, const std::string& v) {
             const auto nums = parse_numbers(k, v, 8);
             for (double f : nums)
                 if (f < 0.0 || f > 1.0)
                     throw ConfigError("config: pre_roi vertices must lie in [0,1]");
             for (int i = 0; i < 4; ++i)
                 c.lane.pre_roi[i] = {nums[2 * i], nums[2 * i + 1]};
         }},
        {"roi_top_margin", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.lane.roi_top_margin = parse_double(k, v);
         }},
        {"lookahead_frac", [](AppConfig& c, const std::string& k, const std::string& v) {
             const double f = parse_double(k, v);
             if (!(f > 0.0 && f < 1.0))
                 throw ConfigError("config: lookahead_frac must lie in (0,1)");
             c.lane.lookahead_frac = f;
         }},
        {"smoothing_alpha", [](AppConfig& c, const std::string& k, const std::string& v) {
             const double a = parse_double(k, v);
             if (a < 0.0 || a > 1.0)
                 throw ConfigError("config: smoothing_alpha must lie in [0,1]");
             c.lane.smoothing_alpha = a;
         }},
        {"max_coast_frames", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.lane.max_coast_frames = parse_int(k, v);
         }},
        // Control
        {"base_duty", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.control.base_duty = parse_double(k, v);
         }},
        {"theta_max_deg", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.control.theta_max_deg = parse_double(k, v);
         }},
        {"boost_gain", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.control.boost_gain = parse_double(k, v);
         }},
        // Camera
        {"image_width", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.camera.width = parse_int(k, v);
         }},
        {"image_height", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.camera.height = parse_int(k, v);
         }},
        {"focal_px", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.camera.focal = parse_double(k, v);
         }},
        {"cam_height", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.camera.cam_height = parse_double(k, v);
         }},
        {"cam_pitch", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.camera.pitch = parse_double(k, v);
         }},
        // Simulation
        {"dt", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.sim.dt = parse_double(k, v);
         }},
        {"wheel_base", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.sim.wheel_base = parse_double(k, v);
         }},
        {"max_wheel_speed", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.sim.max_wheel_speed = parse_double(k, v);
         }},
        {"steps", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.sim.steps = parse_int(k, v);
         }},
        {"departure_abort", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.sim.departure_abort = parse_bool(k, v);
         }},
        // Road
        {"road_kind", [](AppConfig& c, const std::string&, const std::string& v) {
             if (v != "straight" && v != "arc" && v != "polyline")
                 throw ConfigError("config: road_kind must be straight, arc or polyline");
             c.road_kind = v;
         }},
        {"road_length", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.road_length = parse_double(k, v);
         }},
        {"road_radius", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.road_radius = parse_double(k, v);
         }},
        {"road_waypoints", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.road_waypoints = parse_waypoints(k, v);
         }},
        {"lane_width", [](AppConfig& c, const std::string& k, const std::string& v) {
             const double w = parse_double(k, v);
             if (!(w > 0.0)) throw ConfigError("config: lane_width must be positive");
             c.lane_width = w;
         }},
        {"marking_width", [](AppConfig& c, const std::string& k, const std::string& v) {
             const double w = parse_double(k, v);
             if (!(w > 0.0)) throw ConfigError("config: marking_width must be positive");
             c.marking_width = w;
         }},
        {"marking_color", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.marking_color = parse_color(k, v);
         }},
        {"road_color", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.road_color = parse_color(k, v);
         }},
        {"background_color", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.background_color = parse_color(k, v);
         }},
        {"render_noise_amp", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.render_noise_amp = parse_int(k, v);
         }},
        {"render_noise_seed", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.render_noise_seed = static_cast<std::uint32_t>(parse_int(k, v));
         }},
        // Initial pose
        {"init_x", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.init_x = parse_double(k, v);
         }},
        {"init_y", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.init_y = parse_double(k, v);
         }},
        {"init_heading_deg", [](AppConfig& c, const std::string& k, const std::string& v) {
             c.init_heading_deg = parse_double(k, v);
         }},
        {"actuator_log", [](AppConfig& c, const std::string&, const std::string& v) {
             c.actuator_log = v;
         }},
    };
    return table;
}

}  // namespace

RoadSpec AppConfig::road() const {
    RoadSpec spec;
    if (road_kind == "straight") {
        spec = RoadSpec::straight(road_length, lane_width);
    } else if (road_kind == "arc") {
        if (road_radius == 0.0)
            throw ConfigError("config: road_radius must be nonzero for arc roads");
        spec = RoadSpec::arc(road_radius, road_length, lane_width);
    } else {
        if (road_waypoints.size() < 2)
            throw ConfigError("config: polyline roads need road_waypoints");
        spec.kind = RoadSpec::Kind::Polyline;
        spec.waypoints = road_waypoints;
        spec.lane_width = lane_width;
    }
    spec.marking_width = marking_width;
    spec.marking_color = marking_color;
    spec.road_color = road_color;
    spec.background_color = background_color;
    spec.noise_amp = render_noise_amp;
    spec.noise_seed = render_noise_seed;
    return spec;
}

VehicleState AppConfig::initial_state() const {
    return {init_x, init_y, deg_to_rad(init_heading_deg)};
}

void apply_config_kv(AppConfig& config, const std::string& key,
                     const std::string& value) {
    const auto& table = setters();
    const auto it = table.find(key);
    if (it == table.end()) throw ConfigError("config: unknown key '" + key + "'");
    it->second(config, key, value);
}

void apply_config_file(AppConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: " + path + ":" + std::to_string(lineno) +
                              ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config: " + path + ":" + std::to_string(lineno) +
                              ": empty key");
        apply_config_kv(config, key, value);
    }
}

}  // namespace lanekit
