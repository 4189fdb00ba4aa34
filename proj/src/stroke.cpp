#include "flapsim/stroke.hpp"

#include <cmath>
#include <numbers>

namespace flapsim {

double StrokeDrive::displacement(double t) const { return z_max * std::sin(omega * t + phase); }

double StrokeDrive::velocity(double t) const {
    return z_max * omega * std::cos(omega * t + phase);
}

double StrokeDrive::acceleration(double t) const {
    return -z_max * omega * omega * std::sin(omega * t + phase);
}

StrokeDrive drive_of(const StrokeParams& p, double phase) {
    return StrokeDrive{p.z_max, p.omega, phase};
}

Derivative stroke_rhs(const SimState& s, const StrokeParams& p, const StrokeDrive& drive,
                      bool linearized) {
    const double cos_theta = linearized ? 1.0 : std::cos(s.angle);
    const double spring = -p.k_t * s.angle;
    const double flap_drag = -p.b * p.L_w * p.L_w * s.rate;
    const double heave_drag = -p.b * p.L_w * drive.velocity(s.t) * cos_theta;
    const double inertial = -p.m_r * p.L * cos_theta * drive.acceleration(s.t);
    return Derivative{s.rate, (spring + flap_drag + heave_drag + inertial) / p.inertia()};
}

double calibrate_damping(double L_w, double omega, double z_max, double peak_force) {
    return peak_force / (L_w * omega * std::numbers::pi / 3.0 + z_max * omega);
}

double inertial_force(const StrokeParams& p) { return p.m_r * p.L * p.omega * p.omega; }

double inertial_torque(const StrokeParams& p) { return inertial_force(p) * p.L; }

}  // namespace flapsim
