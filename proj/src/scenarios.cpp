#include "flapsim/scenarios.hpp"

namespace flapsim {

const std::vector<Scenario>& builtin_scenarios() {
    static const std::vector<Scenario> scenarios = {
        {"fig2-stroke",
         "stroke transmission driven at resonance at its 60 degree design point",
         R"(# Stroke transmission at the design point: resonant drive, calibrated damping.
mode = simulate
model = stroke

[stroke]
m_r = 2 mg
L = 2.5 mm
k_t = 20 uNm
L_w = 4.4 mm
z_max = 0.8 mm
drive = resonant
damping = auto
)"},
        {"exp-70hz-mass-tuning",
         "resonant mass needed to bring the bench prototype down to 70 Hz",
         R"(# How much resonant mass retunes the stock transmission to 70 Hz.
mode = design

[design]
task = resonant-mass
k_t = 20 uNm
L = 2.5 mm
f_target = 70 Hz
verify = on
z_max = 0.8 mm
L_w = 4.4 mm
)"},
        {"pitch-design-point",
         "passive pitch rotation at its design operating point",
         R"(# Passive pitch at the design point: 45 degree stroke at 70 Hz,
# damping set so the peak aerodynamic force is 1 mN.
mode = simulate
model = pitch

[pitch]
m = 4 mg
l = 5 mm
k = 20 uNm
p = 2.5 mm
L_w = 4 mm
A = 45 deg
f = 70 Hz
aero_force = 1 mN
)"},
        {"pitch-phase-check",
         "long pitch run for phase measurements against the stroke drive",
         R"(# Pitch timing check: longer run, wider measurement window.
mode = simulate
model = pitch

[pitch]
m = 4 mg
l = 5 mm
k = 20 uNm
p = 2.5 mm
L_w = 4 mm
A = 45 deg
f = 70 Hz
aero_force = 1 mN

[integration]
cycles = 200

[analysis]
window_cycles = 50
)"},
        {"pivot-table1",
         "stiffness and stress of the 16-beam stainless pivot, all topologies",
         R"(# Compliant pivot: 16 beams of 38 um stainless shim, checked at the
# 60 degree working deflection of a 20 uNm/rad transmission.
mode = pivot

[pivot]
beams = 16
beam_length = 1 mm
beam_width = 0.1 mm
beam_thickness = 38 um
elastic_modulus = 193 GPa
shear_modulus = 75 GPa
stress_budget = 0.8 GPa
topology = serial-torsion
max_angle = 60 deg
k_t = 20 uNm
)"},
        {"resonance-sweep",
         "stroke amplitude versus drive frequency around the 70 Hz bench point",
         R"(# Amplitude response around resonance for the mass-tuned 70 Hz bench setup.
mode = sweep
model = stroke

[stroke]
tune_mass_to = 70 Hz
L = 2.5 mm
k_t = 20 uNm
L_w = 4.4 mm
z_max = 0.8 mm
drive = resonant
damping = auto

[sweep]
freq_scale = 0.8, 0.9, 1.0, 1.1, 1.2
)"},
    };
    return scenarios;
}

std::optional<std::string> find_scenario(const std::string& name) {
    for (const Scenario& s : builtin_scenarios()) {
        if (s.name == name) return s.config_text;
    }
    return std::nullopt;
}

}  // namespace flapsim
