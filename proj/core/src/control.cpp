#include <lanekit/control.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <lanekit/netpbm.hpp>

namespace lanekit {

MotorCommand angle_to_command(double angle_deg, const ControlConfig& config) {
    const double u =
        std::clamp(angle_deg, -config.theta_max_deg, config.theta_max_deg) /
        config.theta_max_deg;
    const double mag = std::abs(u);

    const double inner = std::clamp(config.base_duty * (1.0 - mag), 0.0, 1.0);
    const double outer =
        std::min(1.0, config.base_duty * (1.0 + config.boost_gain * mag));

    // u > 0 steers right: right wheel is the inner one.
    if (u > 0.0) return {outer, inner};
    if (u < 0.0) return {inner, outer};
    return {config.base_duty, config.base_duty};
}

MotorCommand stop() { return {0.0, 0.0}; }

LogActuator::LogActuator(const std::string& path) : out_(path, std::ios::trunc) {
    if (!out_) throw IoError("LogActuator: cannot open " + path);
}

void LogActuator::apply(const MotorCommand& command) {
    char line[64];
    std::snprintf(line, sizeof(line), "%d,%.4f,%.4f\n", step_++,
                  command.left_duty, command.right_duty);
    out_ << line;
    out_.flush();
}

}  // namespace lanekit
