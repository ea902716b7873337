#pragma once

#include <fstream>
#include <string>

namespace lanekit {

/// Differential-drive wheel duties, forward-only, each in [0, 1].
struct MotorCommand {
    double left_duty = 0.0;
    double right_duty = 0.0;
};

struct ControlConfig {
    double base_duty = 0.6;
    double theta_max_deg = 45.0;  // angle magnitude mapped to a full turn
    double boost_gain = 0.5;      // outer-wheel acceleration factor
};

/// Linear decelerate-inner / accelerate-outer law. With u =
/// clamp(angle, -theta_max, theta_max) / theta_max, the inner wheel
/// (right when u > 0) runs at base*(1-|u|) and the outer at
/// min(1, base*(1+boost*|u|)). A full-deflection turn stops the inner
/// wheel entirely.
MotorCommand angle_to_command(double angle_deg, const ControlConfig& config);

/// Both duties zero.
MotorCommand stop();

/// Actuator contract implemented by the simulator (SimActuator) and by
/// LogActuator; shaped so a GPIO/PWM driver can slot in later. stop() is
/// equivalent to apply({0, 0}).
class Actuator {
public:
    virtual ~Actuator() = default;
    virtual void apply(const MotorCommand& command) = 0;
    virtual void stop_motors() { apply(MotorCommand{0.0, 0.0}); }
};

/// Records one `step,left_duty,right_duty` line per command (4 fractional
/// digits) to a file.
class LogActuator : public Actuator {
public:
    explicit LogActuator(const std::string& path);
    void apply(const MotorCommand& command) override;

private:
    std::ofstream out_;
    int step_ = 0;
};

}  // namespace lanekit
