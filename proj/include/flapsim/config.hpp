#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flapsim/analysis.hpp"
#include "flapsim/design.hpp"
#include "flapsim/integrator.hpp"
#include "flapsim/params.hpp"
#include "flapsim/stroke.hpp"

namespace flapsim {

enum class RunMode { simulate, sweep, design, pivot };

std::string to_string(RunMode m);

/// How the drive frequency is chosen: at the transmission's own resonance, or
/// pinned to an explicit value.
struct DriveSpec {
    bool resonant = true;
    double omega = 0.0;  ///< [rad/s], used when !resonant

    bool operator==(const DriveSpec&) const = default;
};

/// How b is chosen: calibrated from the peak-force rule, or given directly.
struct DampingSpec {
    bool automatic = true;
    double b = 0.0;                             ///< [N s/m], used when !automatic
    double peak_force = kDefaultPeakWingForce;  ///< calibration load [N]
    double scale = 1.0;                         ///< multiplier on the calibrated b

    bool operator==(const DampingSpec&) const = default;
};

struct StrokeSettings {
    std::optional<double> m_r;           ///< [kg]; exactly one of m_r and
    std::optional<double> tune_mass_to;  ///< [Hz]; tune_mass_to must be set
    double L = 0.0;
    double k_t = 0.0;
    double L_w = 0.0;
    double z_max = 0.0;
    DriveSpec drive;
    DampingSpec damping;

    bool operator==(const StrokeSettings&) const = default;
};

struct PitchSettings {
    double m = 0.0;
    double l = 0.0;
    double k = 0.0;
    double p = 0.0;
    double L_w = 0.0;
    double A = 0.0;
    double omega = 0.0;               ///< [rad/s], resolved from `f` or `omega`
    std::optional<double> aero_force; ///< [N]; sets b = aero_force / (L_w A omega)
    std::optional<double> b;          ///< [N s/m]; exclusive with aero_force

    bool operator==(const PitchSettings&) const = default;
};

/// Integration plan in drive-period units; the absolute IntegrationConfig is
/// derived once the drive frequency is known.
struct IntegrationSettings {
    int steps_per_cycle = 2000;
    int cycles = 100;
    int output_every = 1;  ///< output sample every this many steps
    Method method = Method::rk4;

    bool operator==(const IntegrationSettings&) const = default;
};

struct SweepSettings {
    std::vector<double> freq_scale;  ///< multiples of the resonant frequency
    std::vector<double> freqs_hz;    ///< absolute frequencies [Hz]

    bool operator==(const SweepSettings&) const = default;
};

enum class DesignTask { resonant_mass, stroke_amplitude };

std::string to_string(DesignTask t);

struct DesignSettings {
    DesignTask task = DesignTask::resonant_mass;
    // resonant-mass task
    double k_t = 0.0;
    double L = 0.0;
    double f_target = 0.0;  ///< [Hz]
    bool verify = false;    ///< also simulate the tuned design
    double z_max = 0.0;     ///< verify-sim drive amplitude [m]
    double L_w = 0.0;       ///< verify-sim wing radius [m]
    // stroke-amplitude task (z_max, L_w shared with above)
    double m_r = 0.0;
    double target_amplitude = 0.0;  ///< [rad]
    SearchBounds bounds;
    double tolerance = 0.05;
    int grid_points = 9;

    bool operator==(const DesignSettings&) const = default;
};

struct PivotSettings {
    PivotSpec spec;
    double max_angle = 0.0;  ///< working deflection for the stress check [rad]
    double k_t = 0.0;        ///< transmission stiffness loading the pivot [N m/rad]

    bool operator==(const PivotSettings&) const = default;
};

struct OutputSettings {
    std::string trajectory;  ///< trajectory/sweep CSV filename; empty = default
    std::string summary;     ///< summary JSON filename; empty = default

    bool operator==(const OutputSettings&) const = default;
};

struct ScenarioConfig {
    RunMode mode = RunMode::simulate;
    std::optional<ModelKind> model;
    std::optional<StrokeSettings> stroke;
    std::optional<PitchSettings> pitch;
    IntegrationSettings integration;
    AnalysisSettings analysis;
    std::optional<SweepSettings> sweep;
    std::optional<DesignSettings> design;
    std::optional<PivotSettings> pivot;
    OutputSettings output;

    bool operator==(const ScenarioConfig&) const = default;
};

/// Parse the INI-style config grammar (see README). Values may carry unit
/// suffixes; everything is converted to SI base units here, radians included.
/// Throws ValidationError carrying every problem found: unknown keys or
/// sections, bad units, dimension mismatches, missing fields, bad values.
ScenarioConfig parse_config(const std::string& text, const std::string& source_name = "config");

/// Canonical config text: SI base units, fixed key order, no comments.
/// parse_config(dump_config(c)) == c holds for any valid c.
std::string dump_config(const ScenarioConfig& cfg);

/// Turn settings into validated physical parameters.
StrokeParams resolve(const StrokeSettings& s);
PitchParams resolve(const PitchSettings& s);

/// Absolute integration plan for one drive period [s].
IntegrationConfig integration_for(const IntegrationSettings& s, double drive_period);

}  // namespace flapsim
