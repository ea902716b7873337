#include <lanekit/sim.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lanekit {

namespace {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

double dot3(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

// Camera basis in world coordinates: forward along the (pitched) optical
// axis, right = vehicle right, down = image-y direction.
struct CameraFrame {
    Vec3 origin;
    Vec3 fwd;
    Vec3 right;
    Vec3 down;
    double cx, cy;
};

CameraFrame make_camera_frame(const VehicleState& state, const CameraSpec& cam) {
    const double ch = std::cos(state.heading), sh = std::sin(state.heading);
    const double cp = std::cos(cam.pitch), sp = std::sin(cam.pitch);
    CameraFrame f;
    f.origin = {state.x, state.y, cam.cam_height};
    f.fwd = {cp * ch, cp * sh, -sp};
    f.right = {sh, -ch, 0.0};
    f.down = {-sp * ch, -sp * sh, -cp};
    f.cx = (cam.width - 1) / 2.0;
    f.cy = (cam.height - 1) / 2.0;
    return f;
}

// Signed lateral offset (positive = right of travel direction) and
// whether the query falls within the longitudinal extent of the road.
struct LateralQuery {
    double lateral = 0.0;
    bool in_extent = false;
};

LateralQuery query_polyline(const std::vector<Vec2>& pts, Vec2 p) {
    LateralQuery best;
    double best_dist = std::numeric_limits<double>::infinity();
    const std::size_t nseg = pts.size() < 2 ? 0 : pts.size() - 1;
    for (std::size_t i = 0; i < nseg; ++i) {
        const Vec2 a = pts[i];
        const Vec2 b = pts[i + 1];
        const Vec2 ab = b - a;
        const double len2 = dot(ab, ab);
        if (len2 <= 0.0) continue;
        const double t_raw = dot(p - a, ab) / len2;
        const double t = std::clamp(t_raw, 0.0, 1.0);
        const Vec2 nearest = a + t * ab;
        const double dist = norm(p - nearest);
        if (dist < best_dist) {
            best_dist = dist;
            const Vec2 dir = (1.0 / std::sqrt(len2)) * ab;
            // Right of the travel direction is (dir.y, -dir.x).
            best.lateral = (p.x - a.x) * dir.y - (p.y - a.y) * dir.x;
            best.in_extent = !((i == 0 && t_raw < 0.0) ||
                               (i + 1 == nseg && t_raw > 1.0));
        }
    }
    return best;
}

LateralQuery query_arc(const RoadSpec& road, Vec2 p) {
    const double k = road.arc_curvature;
    const double radius = 1.0 / std::abs(k);
    const Vec2 center =
        road.arc_start + (1.0 / k) * Vec2{-std::sin(road.arc_heading),
                                          std::cos(road.arc_heading)};
    const Vec2 rel = p - center;
    const double d = norm(rel);

    LateralQuery q;
    q.lateral = (k > 0.0 ? 1.0 : -1.0) * (d - radius);

    // Angular progress along the travel direction from the start point.
    const double phi0 = std::atan2(road.arc_start.y - center.y,
                                   road.arc_start.x - center.x);
    const double phi = std::atan2(rel.y, rel.x);
    double sweep = (k > 0.0) ? phi - phi0 : phi0 - phi;
    sweep = std::fmod(sweep, 2.0 * kPi);
    if (sweep < 0.0) sweep += 2.0 * kPi;
    q.in_extent = sweep * radius <= road.arc_length;
    return q;
}

LateralQuery query_road(const RoadSpec& road, Vec2 p) {
    if (road.kind == RoadSpec::Kind::Arc && road.arc_curvature != 0.0)
        return query_arc(road, p);
    return query_polyline(road.waypoints, p);
}

std::uint32_t pixel_hash(std::uint32_t x, std::uint32_t y, std::uint32_t seed) {
    std::uint32_t h = seed ^ (x * 0x9E3779B9u) ^ (y * 0x85EBCA6Bu);
    h ^= h >> 16;
    h *= 0x7FEB352Du;
    h ^= h >> 15;
    h *= 0x846CA68Bu;
    h ^= h >> 16;
    return h;
}

}  // namespace

RoadSpec RoadSpec::straight(double length, double lane_width) {
    RoadSpec road;
    road.kind = Kind::Polyline;
    road.waypoints = {{-1.0, 0.0}, {length, 0.0}};
    road.lane_width = lane_width;
    return road;
}

RoadSpec RoadSpec::arc(double radius, double length, double lane_width) {
    if (radius == 0.0) throw std::invalid_argument("RoadSpec::arc: radius must be nonzero");
    RoadSpec road;
    road.kind = Kind::Arc;
    road.arc_start = {0.0, 0.0};
    road.arc_heading = 0.0;
    road.arc_curvature = 1.0 / radius;
    road.arc_length = length;
    road.lane_width = lane_width;
    return road;
}

ImageBuffer render_frame(const RoadSpec& road, const VehicleState& state,
                         const CameraSpec& cam) {
    const CameraFrame f = make_camera_frame(state, cam);
    ImageBuffer img = ImageBuffer::create(cam.width, cam.height, 3);

    const double half_lane = road.lane_width / 2.0;
    const double half_mark = road.marking_width / 2.0;

    for (int py = 0; py < cam.height; ++py) {
        for (int px = 0; px < cam.width; ++px) {
            const double ax = (px - f.cx) / cam.focal;
            const double ay = (py - f.cy) / cam.focal;
            const Vec3 dir{f.fwd.x + ax * f.right.x + ay * f.down.x,
                           f.fwd.y + ax * f.right.y + ay * f.down.y,
                           f.fwd.z + ax * f.right.z + ay * f.down.z};

            Rgb color = road.background_color;
            if (dir.z < -1e-12) {
                const double t = f.origin.z / -dir.z;
                const Vec2 ground{f.origin.x + t * dir.x, f.origin.y + t * dir.y};
                const LateralQuery q = query_road(road, ground);
                if (q.in_extent) {
                    const double a = std::abs(q.lateral);
                    if (std::abs(a - half_lane) <= half_mark)
                        color = road.marking_color;
                    else if (a < half_lane)
                        color = road.road_color;
                }
            }

            if (road.noise_amp > 0) {
                const std::uint32_t hash = pixel_hash(px, py, road.noise_seed);
                const int offset =
                    static_cast<int>(hash % (2 * road.noise_amp + 1)) - road.noise_amp;
                auto jitter = [&](std::uint8_t v) {
                    return static_cast<std::uint8_t>(std::clamp(v + offset, 0, 255));
                };
                color = {jitter(color.r), jitter(color.g), jitter(color.b)};
            }

            const std::size_t i = img.index(px, py);
            img.data[i + 0] = color.r;
            img.data[i + 1] = color.g;
            img.data[i + 2] = color.b;
        }
    }
    return img;
}

std::optional<Vec2> project_ground_point(const VehicleState& state,
                                         const CameraSpec& cam, Vec2 world) {
    const CameraFrame f = make_camera_frame(state, cam);
    const Vec3 rel{world.x - f.origin.x, world.y - f.origin.y, -f.origin.z};
    const double zc = dot3(rel, f.fwd);
    if (zc <= 1e-9) return std::nullopt;
    return Vec2{f.cx + cam.focal * dot3(rel, f.right) / zc,
                f.cy + cam.focal * dot3(rel, f.down) / zc};
}

VehicleState step_vehicle(const VehicleState& state, const MotorCommand& cmd,
                          const SimParams& params) {
    const double vl = cmd.left_duty * params.max_wheel_speed;
    const double vr = cmd.right_duty * params.max_wheel_speed;
    const double v = 0.5 * (vl + vr);
    const double omega = (vr - vl) / params.wheel_base;

    VehicleState next = state;
    if (std::abs(omega) < 1e-9) {
        next.x += v * params.dt * std::cos(state.heading);
        next.y += v * params.dt * std::sin(state.heading);
    } else {
        // Exact rotation about the instantaneous center.
        const double h0 = state.heading;
        const double h1 = h0 + omega * params.dt;
        next.x += (v / omega) * (std::sin(h1) - std::sin(h0));
        next.y -= (v / omega) * (std::cos(h1) - std::cos(h0));
        next.heading = h1;
    }
    next.heading = std::remainder(next.heading, 2.0 * kPi);
    if (next.heading <= -kPi) next.heading += 2.0 * kPi;
    return next;
}

double cross_track_error(const VehicleState& state, const RoadSpec& road) {
    return query_road(road, {state.x, state.y}).lateral;
}

RunReport run_closed_loop(const RoadSpec& road, const CameraSpec& cam,
                          const LaneConfig& lane_cfg, const ControlConfig& ctl_cfg,
                          const SimParams& params, const VehicleState& initial,
                          Actuator* extra_actuator) {
    RunReport report;
    VehicleState state = initial;
    SimActuator actuator(state, params);

    std::optional<LaneEstimate> prev;
    double abs_cte_sum = 0.0;

    for (int i = 0; i < params.steps; ++i) {
        const ImageBuffer frame = render_frame(road, state, cam);
        const LaneEstimate est = detect_lane(frame, lane_cfg, prev);
        const MotorCommand cmd = est.status == LaneStatus::Lost
                                     ? stop()
                                     : angle_to_command(est.steering_angle, ctl_cfg);
        const double cte = cross_track_error(state, road);

        report.steps.push_back({i, state, est, cmd, cte});
        abs_cte_sum += std::abs(cte);
        report.max_abs_cte = std::max(report.max_abs_cte, std::abs(cte));
        if (std::abs(cte) > road.lane_width / 2.0) report.departures++;
        if (est.status == LaneStatus::Lost) report.steps_lost++;

        if (params.departure_abort && std::abs(cte) > road.lane_width / 2.0) break;

        if (extra_actuator) extra_actuator->apply(cmd);
        actuator.apply(cmd);
        prev = est;
    }

    report.final_state = state;
    if (!report.steps.empty())
        report.mean_abs_cte = abs_cte_sum / report.steps.size();
    return report;
}

}  // namespace lanekit
