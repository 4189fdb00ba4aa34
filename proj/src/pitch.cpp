#include "flapsim/pitch.hpp"

#include <algorithm>
#include <cmath>

namespace flapsim {

Derivative pitch_rhs(const SimState& s, const PitchParams& p) {
    const PitchTorques q = pitch_torques_at(s, p);
    return Derivative{s.rate, (q.spring + q.aerodynamic + q.centripetal) / p.inertia()};
}

PitchTorques pitch_torques_at(const SimState& s, const PitchParams& p) {
    const double stroke_rate = p.A * p.omega * std::cos(p.omega * s.t);
    PitchTorques q;
    q.t = s.t;
    q.spring = -p.k * s.angle;
    q.aerodynamic = p.b * p.L_w * stroke_rate * p.p;
    q.centripetal = p.inertia() * std::sin(s.angle) * std::cos(s.angle) * stroke_rate * stroke_rate;
    return q;
}

PitchTorqueSeries pitch_torque_decomposition(const Trajectory& traj, const PitchParams& p,
                                             double window_fraction) {
    if (traj.label() != ModelKind::pitch) {
        throw ValidationError({"torque decomposition needs a pitch trajectory, got " +
                               to_string(traj.label())});
    }
    if (!(window_fraction > 0.0 && window_fraction <= 1.0)) {
        throw ValidationError({"window_fraction must be in (0, 1], got " +
                               std::to_string(window_fraction)});
    }
    PitchTorqueSeries out;
    out.samples.reserve(traj.size());
    for (const SimState& s : traj.samples()) out.samples.push_back(pitch_torques_at(s, p));

    const double t_from = traj.t_end() - window_fraction * (traj.t_end() - traj.t_start());
    for (const PitchTorques& q : out.samples) {
        if (q.t < t_from) continue;
        out.peaks.spring = std::max(out.peaks.spring, std::abs(q.spring));
        out.peaks.aerodynamic = std::max(out.peaks.aerodynamic, std::abs(q.aerodynamic));
        out.peaks.centripetal = std::max(out.peaks.centripetal, std::abs(q.centripetal));
    }
    return out;
}

}  // namespace flapsim
