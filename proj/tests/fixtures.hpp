#pragma once

// Canonical parameter sets used across the test suite, constructed by hand in
// SI units so the tests do not depend on the config layer.

#include <numbers>

#include "flapsim/params.hpp"
#include "flapsim/stroke.hpp"

namespace fixtures {

// Stroke transmission design point: 2 mg rotor mass at 2.5 mm, 20 uNm/rad
// spring, 4.4 mm wing lever, 0.8 mm heave, driven at resonance with the
// damping calibrated from the default peak wing force.
inline flapsim::StrokeParams design_stroke() {
    flapsim::StrokeParams p;
    p.m_r = 2.0e-6;
    p.L = 2.5e-3;
    p.k_t = 20.0e-6;
    p.L_w = 4.4e-3;
    p.z_max = 0.8e-3;
    p.omega = flapsim::natural_frequency(p);
    p.b = flapsim::calibrate_damping(p.L_w, p.omega, p.z_max);
    return p;
}

// Passive pitch design point: 45 degree stroke at 70 Hz, damping chosen so
// the peak aerodynamic force on the wing is 1 mN.
inline flapsim::PitchParams design_pitch() {
    return flapsim::PitchParams::with_peak_aero_force(
        4.0e-6, 5.0e-3, 20.0e-6, 2.5e-3, 4.0e-3, std::numbers::pi / 4.0,
        2.0 * std::numbers::pi * 70.0, 1.0e-3);
}

// 16-beam stainless shim pivot checked in the stiffness tables.
inline flapsim::PivotSpec table_pivot(flapsim::PivotTopology topology) {
    flapsim::PivotSpec s;
    s.n_beams = 16;
    s.beam_length = 1.0e-3;
    s.beam_width = 0.1e-3;
    s.beam_thickness = 38.0e-6;
    s.elastic_modulus = 193.0e9;
    s.shear_modulus = 75.0e9;
    s.stress_budget = 0.8e9;
    s.topology = topology;
    return s;
}

}  // namespace fixtures
