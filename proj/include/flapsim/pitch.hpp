#pragma once

#include <vector>

#include "flapsim/params.hpp"
#include "flapsim/types.hpp"

namespace flapsim {

/// Pitch equation of motion about the wing's long axis, driven by a stroke
/// theta(t) = A sin(omega t). The torque balance is
///
///   m l^2 phi'' = -k phi + b L_w A omega cos(omega t) p
///                 + m l^2 sin(phi) cos(phi) (A omega cos(omega t))^2
///
/// aerodynamic drag at the center of pressure plus the centripetal torque of
/// the off-axis mass. There is no phi' damping term: the model is taken as
/// stated, so free pitch oscillation persists indefinitely.
Derivative pitch_rhs(const SimState& s, const PitchParams& p);

/// The three RHS torque contributions at one instant [N m].
struct PitchTorques {
    double t = 0.0;
    double spring = 0.0;       ///< -k phi
    double aerodynamic = 0.0;  ///< b L_w A omega cos(omega t) p
    double centripetal = 0.0;  ///< m l^2 sin(phi) cos(phi) (A omega cos(omega t))^2
};

PitchTorques pitch_torques_at(const SimState& s, const PitchParams& p);

/// Peak absolute value of each torque term over an evaluation window.
struct TorquePeaks {
    double spring = 0.0;
    double aerodynamic = 0.0;
    double centripetal = 0.0;
};

/// Per-sample torque terms over the whole trajectory, plus their peak
/// magnitudes over the trailing `window_fraction` of the run.
struct PitchTorqueSeries {
    std::vector<PitchTorques> samples;
    TorquePeaks peaks;
};

/// Evaluate the torque terms along `traj`. Throws ValidationError unless the
/// trajectory is labelled ModelKind::pitch: decomposing a stroke trajectory
/// with pitch parameters would be silently meaningless.
PitchTorqueSeries pitch_torque_decomposition(const Trajectory& traj, const PitchParams& p,
                                             double window_fraction = 0.25);

}  // namespace flapsim
