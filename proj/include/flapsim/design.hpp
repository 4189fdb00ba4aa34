#pragma once

#include <stdexcept>

#include "flapsim/params.hpp"
#include "flapsim/stroke.hpp"

namespace flapsim {

/// Resonant mass that tunes a stroke transmission of stiffness k_t and mass
/// radius L to natural frequency f_target [Hz]: m_r = k_t / ((2 pi f)^2 L^2).
double solve_resonant_mass(double k_t, double L, double f_target);

/// Fixed quantities of a stroke-amplitude design problem. The drive frequency
/// is always the candidate's resonant frequency and b is recalibrated per
/// candidate, so the search space is exactly (L, k_t).
struct StrokeDesignInputs {
    double z_max = 0.0;             ///< drive amplitude [m]
    double m_r = 0.0;               ///< resonant mass [kg]
    double L_w = 0.0;               ///< wing center-of-pressure radius [m]
    double target_amplitude = 0.0;  ///< wanted steady stroke amplitude [rad]
    double peak_force = kDefaultPeakWingForce;  ///< damping calibration load [N]
};

struct SearchBounds {
    double L_min = 0.0, L_max = 0.0;      ///< [m]
    double k_t_min = 0.0, k_t_max = 0.0;  ///< [N m/rad]

    bool operator==(const SearchBounds&) const = default;
};

/// Search effort knobs. The defaults keep a full search under a few seconds
/// while measuring amplitudes well inside the acceptance tolerance.
struct StrokeDesignOptions {
    int grid_points = 9;        ///< per axis
    int max_bisections = 40;
    double tolerance = 0.05;    ///< relative amplitude residual to stop at
    int steps_per_cycle = 1000;
    int cycles = 60;
    int window_cycles = 15;
};

struct StrokeDesignResult {
    double L = 0.0;          ///< [m]
    double k_t = 0.0;        ///< [N m/rad]
    double omega = 0.0;      ///< resonant drive frequency of the solution [rad/s]
    double b = 0.0;          ///< calibrated damping of the solution [N s/m]
    double amplitude = 0.0;  ///< simulated steady amplitude [rad]
    double residual = 0.0;   ///< (amplitude - target) / target
    int evaluations = 0;     ///< simulations spent
};

/// The search bounds contain no design meeting the target. Carries the best
/// candidate seen so the caller can tell "barely missed" from "hopeless".
class NoSolutionError : public std::runtime_error {
public:
    NoSolutionError(double best_residual, double best_L, double best_k_t);

    double best_residual() const noexcept { return best_residual_; }
    double best_L() const noexcept { return best_L_; }
    double best_k_t() const noexcept { return best_k_t_; }

private:
    double best_residual_;
    double best_L_;
    double best_k_t_;
};

/// Gradient-free search for (L, k_t) whose resonant, recalibrated simulation
/// hits the target amplitude: a deterministic coarse grid locates the best
/// row, then bisection on the amplitude residual refines k_t along it.
/// Derivative-free because each evaluation is a full simulation. Throws
/// NoSolutionError when no bracketing pair exists within bounds.
StrokeDesignResult solve_stroke_design(const StrokeDesignInputs& inputs,
                                       const SearchBounds& bounds,
                                       const StrokeDesignOptions& options = {});

/// Small-deflection stiffness of a compliant pivot [N m/rad].
///
///   parallel-bending:  n E I / l,  I = w t^3 / 12  (beams bend)
///   serial-torsion:    (G J / l) / n, J = w t^3 / 3 (beams twist, stacked)
///   parallel-torsion:  n G J / l
double pivot_stiffness(const PivotSpec& spec);

struct StressCheck {
    double peak_stress = 0.0;  ///< worst per-beam surface stress [Pa]
    bool within_budget = false;
};

/// Peak material stress when the pivot carries torque k_t * max_angle.
/// Serial beams each carry the full torque, parallel beams share it.
/// Bending: sigma = M (t/2) / I. Torsion of a thin strip: tau = 3 T / (w t^2).
StressCheck pivot_stress_check(const PivotSpec& spec, double max_angle, double k_t);

}  // namespace flapsim
