#pragma once

#include "flapsim/params.hpp"
#include "flapsim/types.hpp"

namespace flapsim {

/// Peak force the damping calibration assumes each wing sees, three times
/// the per-wing share of a 1 mN vehicle weight [N].
inline constexpr double kDefaultPeakWingForce = 1.5e-3;

/// Sinusoidal vertical pivot drive z(t) = z_max sin(omega t + phase).
struct StrokeDrive {
    double z_max = 0.0;  ///< [m]
    double omega = 0.0;  ///< [rad/s]
    double phase = 0.0;  ///< [rad]

    double displacement(double t) const;
    double velocity(double t) const;
    double acceleration(double t) const;
};

/// Drive implied by the stroke parameters, with an optional phase offset.
StrokeDrive drive_of(const StrokeParams& p, double phase = 0.0);

/// Stroke equation of motion. The torque balance on the pendulum is
///
///   I theta'' = -k_t theta - b L_w^2 theta' - b L_w z' cos(theta)
///               - m_r L cos(theta) z''
///
/// with I = m_r L^2. `linearized` replaces cos(theta) by 1 for small-angle
/// checks; the default keeps the full nonlinearity.
Derivative stroke_rhs(const SimState& s, const StrokeParams& p, const StrokeDrive& drive,
                      bool linearized = false);

/// Damping coefficient that makes the peak aerodynamic force on the wing
/// equal `peak_force`, accounting for both the flapping speed at one third
/// of the peak stroke rate and the heave speed of the pivot:
///
///   b = peak_force / (L_w omega pi/3 + z_max omega)
double calibrate_damping(double L_w, double omega, double z_max,
                         double peak_force = kDefaultPeakWingForce);

/// Peak inertial force of the resonant mass for one radian of stroke at the
/// drive frequency, m_r L omega^2 [N]. At resonance this equals k_t / L: the
/// inertial torque then statically deflects the spring by exactly one radian.
double inertial_force(const StrokeParams& p);

/// Peak inertial torque about the pivot, inertial_force(p) * L [N m].
double inertial_torque(const StrokeParams& p);

}  // namespace flapsim
