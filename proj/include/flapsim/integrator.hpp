#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "flapsim/types.hpp"

namespace flapsim {

/// `euler_oracle` is forward Euler, kept as a first-class method so results
/// can always be cross-checked against an integrator too simple to be wrong.
enum class Method { rk4, euler_oracle };

std::string to_string(Method m);

/// Fixed-step integration plan. dt_out must be an integer multiple of dt
/// (to 1e-9 relative); output timestamps are computed as t0 + i*dt_out, never
/// accumulated, so they stay uniform over arbitrarily long runs.
struct IntegrationConfig {
    double dt = 0.0;      ///< step size [s]
    double t_end = 0.0;   ///< run length from the initial time [s]
    double dt_out = 0.0;  ///< output sampling interval [s]
    Method method = Method::rk4;

    bool operator==(const IntegrationConfig&) const = default;
};

/// Throws ValidationError with every violation; returns cfg unchanged if ok.
IntegrationConfig validate(const IntegrationConfig& cfg);

namespace detail {

template <typename Rhs>
SimState step_rk4(Rhs& rhs, const SimState& s, double dt) {
    const Derivative k1 = rhs(s);
    const Derivative k2 = rhs(SimState{s.t + 0.5 * dt, s.angle + 0.5 * dt * k1.d_angle,
                                       s.rate + 0.5 * dt * k1.d_rate});
    const Derivative k3 = rhs(SimState{s.t + 0.5 * dt, s.angle + 0.5 * dt * k2.d_angle,
                                       s.rate + 0.5 * dt * k2.d_rate});
    const Derivative k4 =
        rhs(SimState{s.t + dt, s.angle + dt * k3.d_angle, s.rate + dt * k3.d_rate});
    SimState out = s;
    out.angle += dt / 6.0 * (k1.d_angle + 2.0 * k2.d_angle + 2.0 * k3.d_angle + k4.d_angle);
    out.rate += dt / 6.0 * (k1.d_rate + 2.0 * k2.d_rate + 2.0 * k3.d_rate + k4.d_rate);
    return out;
}

template <typename Rhs>
SimState step_euler(Rhs& rhs, const SimState& s, double dt) {
    const Derivative k = rhs(s);
    return SimState{s.t, s.angle + dt * k.d_angle, s.rate + dt * k.d_rate};
}

}  // namespace detail

/// Integrate `rhs` from `initial` over cfg.t_end. Deterministic: identical
/// inputs give bit-identical trajectories. Throws BlowupError with the first
/// time at which the state stops being finite.
template <typename Rhs>
Trajectory integrate(Rhs&& rhs, const SimState& initial, const IntegrationConfig& cfg,
                     ModelKind label) {
    validate(cfg);
    if (!initial.finite()) throw ValidationError({"initial state must be finite"});

    const long steps_per_out = std::lround(cfg.dt_out / cfg.dt);
    const long n_out = static_cast<long>(std::floor(cfg.t_end / cfg.dt_out + 1e-9));
    const double t0 = initial.t;

    std::vector<SimState> samples;
    samples.reserve(static_cast<std::size_t>(n_out) + 1);
    samples.push_back(initial);

    SimState s = initial;
    for (long i = 1; i <= n_out; ++i) {
        for (long k = 0; k < steps_per_out; ++k) {
            s.t = t0 + (i - 1) * cfg.dt_out + k * cfg.dt;
            s = cfg.method == Method::rk4 ? detail::step_rk4(rhs, s, cfg.dt)
                                          : detail::step_euler(rhs, s, cfg.dt);
            if (!(std::isfinite(s.angle) && std::isfinite(s.rate))) {
                throw BlowupError(t0 + (i - 1) * cfg.dt_out + (k + 1) * cfg.dt);
            }
        }
        s.t = t0 + i * cfg.dt_out;
        samples.push_back(s);
    }
    return Trajectory(label, std::move(samples));
}

/// Observed convergence order from runs at dt, dt/2, dt/4 against a dt/64
/// reference, comparing the worst angle deviation on the dt output grid.
/// `reliable` requires the two successive order estimates to agree within
/// 0.5 and the errors to shrink monotonically.
struct ConvergenceEstimate {
    double order = 0.0;         ///< finer of the two estimates
    double order_coarse = 0.0;  ///< estimate from the dt -> dt/2 pair
    bool reliable = false;
};

template <typename Rhs>
ConvergenceEstimate convergence_order(Rhs&& rhs, const SimState& initial, double dt,
                                      double t_end, Method method = Method::rk4) {
    auto run = [&](double h) {
        return integrate(rhs, initial, IntegrationConfig{h, t_end, dt, method},
                         ModelKind::synthetic);
    };
    const Trajectory ref = run(dt / 64.0);
    auto error_of = [&](const Trajectory& traj) {
        double worst = 0.0;
        for (std::size_t i = 0; i < traj.size(); ++i) {
            worst = std::max(worst, std::abs(traj[i].angle - ref[i].angle));
        }
        return worst;
    };
    const double e1 = error_of(run(dt));
    const double e2 = error_of(run(dt / 2.0));
    const double e3 = error_of(run(dt / 4.0));

    ConvergenceEstimate out;
    out.order_coarse = std::log2(e1 / e2);
    out.order = std::log2(e2 / e3);
    out.reliable = std::isfinite(out.order) && std::isfinite(out.order_coarse) &&
                   std::abs(out.order - out.order_coarse) <= 0.5 && e1 > e2 && e2 > e3 &&
                   e3 > 0.0;
    return out;
}

}  // namespace flapsim
