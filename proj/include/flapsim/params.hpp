#pragma once

#include <string>

#include "flapsim/types.hpp"

namespace flapsim {

/// Parameters of the stroke transmission: a torsional pendulum whose pivot
/// is shaken vertically by z(t) = z_max sin(omega t + phase). SI base units
/// throughout; angles in radians.
struct StrokeParams {
    double m_r = 0.0;    ///< resonant mass [kg]
    double L = 0.0;      ///< resonant-mass distance from the pivot [m]
    double k_t = 0.0;    ///< torsional stiffness at the pivot [N m/rad]
    double L_w = 0.0;    ///< wing center-of-pressure distance from the pivot [m]
    double b = 0.0;      ///< effective aerodynamic damping coefficient [N s/m]
    double z_max = 0.0;  ///< drive displacement amplitude [m]
    double omega = 0.0;  ///< drive angular frequency [rad/s]

    /// Rotational inertia about the pivot, I = m_r L^2 [kg m^2].
    double inertia() const { return m_r * L * L; }
    double drive_period() const;

    bool operator==(const StrokeParams&) const = default;
};

/// Parameters of the passive pitch rotation: a mass m at distance l from the
/// pitch axis, restrained by stiffness k, forced by the aerodynamic drag and
/// centripetal coupling of a sinusoidal stroke A sin(omega t).
struct PitchParams {
    double m = 0.0;      ///< pitch-resonant mass [kg]
    double l = 0.0;      ///< mass distance from the pitch axis [m]
    double k = 0.0;      ///< pitch torsional stiffness [N m/rad]
    double p = 0.0;      ///< center-of-pressure distance from the stroke axis [m]
    double L_w = 0.0;    ///< center-of-pressure stroke radius [m]
    double b = 0.0;      ///< effective aerodynamic damping coefficient [N s/m]
    double A = 0.0;      ///< stroke amplitude [rad]
    double omega = 0.0;  ///< stroke angular frequency [rad/s]

    double inertia() const { return m * l * l; }

    /// Build with b chosen so the peak aerodynamic drag force b L_w A omega
    /// equals `peak_force` [N].
    static PitchParams with_peak_aero_force(double m, double l, double k, double p, double L_w,
                                            double A, double omega, double peak_force);

    bool operator==(const PitchParams&) const = default;
};

enum class PivotTopology { parallel_bending, serial_torsion, parallel_torsion };

std::string to_string(PivotTopology t);

/// Geometry and material of a multi-beam compliant pivot. Defaults are
/// annealed 301 stainless shim stock with a fatigue-safe working stress.
struct PivotSpec {
    int n_beams = 0;
    double beam_length = 0.0;          ///< flexing length of one beam [m]
    double beam_width = 0.0;           ///< beam width [m]
    double beam_thickness = 0.0;       ///< beam thickness, the smallest dimension [m]
    double elastic_modulus = 193e9;    ///< E [Pa]
    double shear_modulus = 75e9;       ///< G [Pa]
    double stress_budget = 0.8e9;      ///< working stress limit [Pa]
    PivotTopology topology = PivotTopology::serial_torsion;

    bool operator==(const PivotSpec&) const = default;
};

/// Throw ValidationError listing every violated invariant; return the input
/// unchanged when all hold. z_max (and the pitch A) may be zero: the undriven
/// case is legitimate, it is how energy conservation is checked.
StrokeParams validate(const StrokeParams& p);
PitchParams validate(const PitchParams& p);
PivotSpec validate(const PivotSpec& s);

/// Undamped natural angular frequency sqrt(k_t / (m_r L^2)) [rad/s].
double natural_frequency(const StrokeParams& p);
/// Undamped pitch natural frequency sqrt(k / (m l^2)) [rad/s].
double natural_frequency(const PitchParams& p);

}  // namespace flapsim
