#include "flapsim/design.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "flapsim/analysis.hpp"
#include "flapsim/integrator.hpp"

namespace flapsim {

namespace {

constexpr double kPi = std::numbers::pi;

struct Candidate {
    double L = 0.0;
    double k_t = 0.0;
    double omega = 0.0;
    double b = 0.0;
    double amplitude = std::numeric_limits<double>::quiet_NaN();
    double residual = std::numeric_limits<double>::infinity();
};

void check_design_inputs(const StrokeDesignInputs& in, const SearchBounds& bounds,
                         const StrokeDesignOptions& opt) {
    std::vector<std::string> v;
    if (!(in.z_max > 0.0)) v.push_back("z_max must be strictly positive to drive the stroke");
    if (!(in.m_r > 0.0)) v.push_back("m_r must be strictly positive");
    if (!(in.L_w > 0.0)) v.push_back("L_w must be strictly positive");
    if (!(in.target_amplitude > 0.0) || in.target_amplitude > kPi) {
        v.push_back("target_amplitude must be in (0, pi] rad, got " +
                    std::to_string(in.target_amplitude));
    }
    if (!(in.peak_force >= 0.0)) v.push_back("peak_force must be non-negative");
    if (!(bounds.L_min > 0.0) || !(bounds.L_max >= bounds.L_min)) {
        v.push_back("bounds need 0 < L_min <= L_max");
    }
    if (!(bounds.k_t_min > 0.0) || !(bounds.k_t_max >= bounds.k_t_min)) {
        v.push_back("bounds need 0 < k_t_min <= k_t_max");
    }
    if (opt.grid_points < 2) v.push_back("grid_points must be at least 2");
    if (opt.max_bisections < 0) v.push_back("max_bisections must be non-negative");
    if (!(opt.tolerance > 0.0)) v.push_back("tolerance must be strictly positive");
    if (opt.steps_per_cycle < 16) v.push_back("steps_per_cycle must be at least 16");
    if (opt.window_cycles < 1 || opt.cycles <= opt.window_cycles) {
        v.push_back("cycles must exceed window_cycles >= 1");
    }
    if (!v.empty()) throw ValidationError(std::move(v));
}

}  // namespace

double solve_resonant_mass(double k_t, double L, double f_target) {
    std::vector<std::string> v;
    if (!(k_t > 0.0)) v.push_back("k_t must be strictly positive");
    if (!(L > 0.0)) v.push_back("L must be strictly positive");
    if (!(f_target > 0.0)) v.push_back("f_target must be strictly positive");
    if (!v.empty()) throw ValidationError(std::move(v));
    const double omega = 2.0 * kPi * f_target;
    return k_t / (omega * omega * L * L);
}

NoSolutionError::NoSolutionError(double best_residual, double best_L, double best_k_t)
    : std::runtime_error("no design within bounds reaches the target amplitude; best residual " +
                         std::to_string(best_residual) + " at L = " + std::to_string(best_L) +
                         " m, k_t = " + std::to_string(best_k_t) + " N m/rad"),
      best_residual_(best_residual), best_L_(best_L), best_k_t_(best_k_t) {}

StrokeDesignResult solve_stroke_design(const StrokeDesignInputs& inputs,
                                       const SearchBounds& bounds,
                                       const StrokeDesignOptions& options) {
    check_design_inputs(inputs, bounds, options);

    int evaluations = 0;
    auto evaluate = [&](double L, double k_t) {
        Candidate c;
        c.L = L;
        c.k_t = k_t;
        c.omega = std::sqrt(k_t / (inputs.m_r * L * L));
        c.b = calibrate_damping(inputs.L_w, c.omega, inputs.z_max, inputs.peak_force);
        const StrokeParams p{inputs.m_r, L, k_t, inputs.L_w, c.b, inputs.z_max, c.omega};
        const double period = p.drive_period();
        const IntegrationConfig cfg{period / options.steps_per_cycle, options.cycles * period,
                                    period / options.steps_per_cycle, Method::rk4};
        ++evaluations;
        try {
            const StrokeDrive drive = drive_of(p);
            const Trajectory traj = integrate(
                [&](const SimState& s) { return stroke_rhs(s, p, drive); }, SimState{}, cfg,
                ModelKind::stroke);
            c.amplitude =
                steady_amplitude(traj, period, options.window_cycles, 0.02).amplitude;
            c.residual = (c.amplitude - inputs.target_amplitude) / inputs.target_amplitude;
        } catch (const BlowupError&) {
            // candidate stays marked infeasible
        }
        return c;
    };

    auto axis = [&](double lo, double hi) {
        std::vector<double> vals(static_cast<std::size_t>(options.grid_points));
        for (int i = 0; i < options.grid_points; ++i) {
            vals[static_cast<std::size_t>(i)] =
                lo + (hi - lo) * i / static_cast<double>(options.grid_points - 1);
        }
        return vals;
    };
    const std::vector<double> Ls = axis(bounds.L_min, bounds.L_max);
    const std::vector<double> ks = axis(bounds.k_t_min, bounds.k_t_max);

    // Coarse pass. Best candidate = smallest |residual|, ties to grid order.
    std::vector<std::vector<Candidate>> grid(Ls.size());
    Candidate best;
    std::size_t best_row = 0;
    for (std::size_t i = 0; i < Ls.size(); ++i) {
        grid[i].reserve(ks.size());
        for (std::size_t j = 0; j < ks.size(); ++j) {
            grid[i].push_back(evaluate(Ls[i], ks[j]));
            const Candidate& c = grid[i].back();
            if (std::abs(c.residual) < std::abs(best.residual)) {
                best = c;
                best_row = i;
            }
        }
    }

    // Bracket the zero residual along the best row. Amplitude grows with k_t
    // at fixed geometry, so a sign change pins the solution to one interval.
    Candidate lo, hi;
    bool bracketed = false;
    for (std::size_t j = 0; j + 1 < ks.size(); ++j) {
        const Candidate& a = grid[best_row][j];
        const Candidate& c = grid[best_row][j + 1];
        if (!std::isfinite(a.residual) || !std::isfinite(c.residual)) continue;
        if (a.residual == 0.0 || c.residual == 0.0 || a.residual * c.residual < 0.0) {
            lo = a;
            hi = c;
            bracketed = true;
            break;
        }
    }
    if (!bracketed) {
        // The target may still sit within tolerance at a bounds corner even
        // though the residual never changes sign inside the box.
        if (std::abs(best.residual) <= options.tolerance) {
            return StrokeDesignResult{best.L, best.k_t, best.omega, best.b,
                                      best.amplitude, best.residual, evaluations};
        }
        throw NoSolutionError(best.residual, best.L, best.k_t);
    }

    for (int it = 0; it < options.max_bisections; ++it) {
        if (hi.k_t - lo.k_t <= 1e-9 * hi.k_t) break;
        Candidate mid = evaluate(best.L, 0.5 * (lo.k_t + hi.k_t));
        if (std::abs(mid.residual) < std::abs(best.residual)) best = mid;
        if (!std::isfinite(mid.residual)) break;
        if (lo.residual * mid.residual <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    if (!(std::abs(best.residual) <= options.tolerance)) {
        throw NoSolutionError(best.residual, best.L, best.k_t);
    }
    return StrokeDesignResult{best.L, best.k_t, best.omega, best.b,
                              best.amplitude, best.residual, evaluations};
}

double pivot_stiffness(const PivotSpec& spec) {
    validate(spec);
    const double t3 = spec.beam_thickness * spec.beam_thickness * spec.beam_thickness;
    const double bending_I = spec.beam_width * t3 / 12.0;
    const double torsion_J = spec.beam_width * t3 / 3.0;
    const double n = static_cast<double>(spec.n_beams);
    switch (spec.topology) {
        case PivotTopology::parallel_bending:
            return n * spec.elastic_modulus * bending_I / spec.beam_length;
        case PivotTopology::serial_torsion:
            return spec.shear_modulus * torsion_J / spec.beam_length / n;
        case PivotTopology::parallel_torsion:
            return n * spec.shear_modulus * torsion_J / spec.beam_length;
    }
    throw ValidationError({"unknown pivot topology"});
}

StressCheck pivot_stress_check(const PivotSpec& spec, double max_angle, double k_t) {
    validate(spec);
    std::vector<std::string> v;
    if (!(max_angle >= 0.0)) v.push_back("max_angle must be non-negative");
    if (!(k_t > 0.0)) v.push_back("k_t must be strictly positive");
    if (!v.empty()) throw ValidationError(std::move(v));

    const double total_torque = k_t * max_angle;
    const double n = static_cast<double>(spec.n_beams);
    // Serial beams each see the full torque; parallel beams split it.
    const double per_beam =
        spec.topology == PivotTopology::serial_torsion ? total_torque : total_torque / n;

    const double w = spec.beam_width;
    const double t = spec.beam_thickness;
    StressCheck out;
    if (spec.topology == PivotTopology::parallel_bending) {
        out.peak_stress = 6.0 * per_beam / (w * t * t);
    } else {
        out.peak_stress = 3.0 * per_beam / (w * t * t);
    }
    out.within_budget = out.peak_stress <= spec.stress_budget;
    return out;
}

}  // namespace flapsim
