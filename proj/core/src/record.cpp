#include <lanekit/record.hpp>

#include <cstdio>
#include <cstring>

namespace lanekit {

namespace {

// Fixed fractional digits, with negative zero normalized away so equal
// values always serialize identically.
std::string fixed(double v, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    if (buf[0] == '-') {
        bool all_zero = true;
        for (const char* p = buf + 1; *p; ++p)
            if (*p != '0' && *p != '.') {
                all_zero = false;
                break;
            }
        if (all_zero) return std::string(buf + 1);
    }
    return buf;
}

std::string point(Vec2 p, int digits) {
    return "[" + fixed(p.x, digits) + "," + fixed(p.y, digits) + "]";
}

const char* status_name(LaneStatus s) {
    switch (s) {
        case LaneStatus::Tracked: return "Tracked";
        case LaneStatus::Coasting: return "Coasting";
        case LaneStatus::Lost: return "Lost";
    }
    return "Lost";
}

std::string line_triplet(const std::optional<PolarLine>& line) {
    if (!line) return "null";
    return "[" + fixed(line->rho, 2) + "," + fixed(line->theta, 3) + "," +
           std::to_string(line->votes) + "]";
}

std::string estimate_fields(int frame_index, const LaneEstimate& est) {
    std::string s = "{\"frame_index\":" + std::to_string(frame_index);
    s += ",\"status\":\"" + std::string(status_name(est.status)) + "\"";
    s += ",\"steering_angle\":" + fixed(est.steering_angle, 3);
    s += ",\"left\":" + line_triplet(est.left);
    s += ",\"right\":" + line_triplet(est.right);
    s += ",\"vanishing_point\":" +
         (est.vanishing_point ? point(*est.vanishing_point, 2) : std::string("null"));
    if (est.roi) {
        const auto& q = *est.roi;
        s += ",\"roi\":[" + point(q[0], 2) + "," + point(q[1], 2) + "," +
             point(q[2], 2) + "," + point(q[3], 2) + "]";
    } else {
        s += ",\"roi\":null";
    }
    if (est.center) {
        s += ",\"center\":[" + point(est.center->a(), 2) + "," +
             point(est.center->b(), 2) + "]";
    } else {
        s += ",\"center\":null";
    }
    return s;
}

}  // namespace

std::string lane_record_line(int frame_index, const LaneEstimate& estimate) {
    return estimate_fields(frame_index, estimate) + "}";
}

std::string run_step_line(const RunReport::Step& step) {
    std::string s = estimate_fields(step.index, step.estimate);
    s += ",\"x\":" + fixed(step.state.x, 6);
    s += ",\"y\":" + fixed(step.state.y, 6);
    s += ",\"heading\":" + fixed(step.state.heading, 6);
    s += ",\"left_duty\":" + fixed(step.command.left_duty, 4);
    s += ",\"right_duty\":" + fixed(step.command.right_duty, 4);
    s += ",\"cte\":" + fixed(step.cte, 6);
    return s + "}";
}

std::string run_summary_line(const RunReport& report) {
    std::string s = "{\"summary\":{";
    s += "\"steps\":" + std::to_string(report.steps.size());
    s += ",\"max_abs_cte\":" + fixed(report.max_abs_cte, 6);
    s += ",\"mean_abs_cte\":" + fixed(report.mean_abs_cte, 6);
    s += ",\"departures\":" + std::to_string(report.departures);
    s += ",\"steps_lost\":" + std::to_string(report.steps_lost);
    s += "}}";
    return s;
}

}  // namespace lanekit
