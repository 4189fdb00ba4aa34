#pragma once

#include <optional>
#include <vector>

#include "flapsim/integrator.hpp"
#include "flapsim/params.hpp"
#include "flapsim/pitch.hpp"
#include "flapsim/types.hpp"

namespace flapsim {

/// Steady-state amplitude measurement over the trailing n_cycles of a run.
struct AmplitudeResult {
    double amplitude = 0.0;         ///< half the mean per-cycle peak-to-peak [rad]
    bool settled = false;           ///< every per-cycle amplitude within tol of their mean
    std::vector<double> per_cycle;  ///< per-cycle amplitudes, oldest first [rad]
};

/// Amplitude = half the mean peak-to-peak over the last n_cycles periods of
/// drive_period, with each cycle's extrema refined by a quadratic through the
/// three bracketing samples. Throws if the trajectory is shorter than the
/// requested window.
AmplitudeResult steady_amplitude(const Trajectory& traj, double drive_period, int n_cycles,
                                 double tol);

/// Phase of the response fundamental relative to sin(omega t + drive_phase),
/// extracted by projecting the trailing n_cycles onto that single frequency
/// bin (no FFT: the drive frequency is known exactly, one projection is both
/// cheaper and alias-free). n_cycles = 0 selects the last quarter of the run
/// rounded down to whole cycles. Negative result means the response lags.
/// Range (-pi, pi].
double phase_lag(const Trajectory& traj, double drive_omega, double drive_phase = 0.0,
                 int n_cycles = 0);

/// Largest |angle| over the trailing window_fraction of the run, refined by
/// quadratic interpolation at the discrete peak [rad].
double peak_angle(const Trajectory& traj, double window_fraction = 0.25);

/// Largest |rate| over the trailing window_fraction of the run [rad/s].
double peak_rate(const Trajectory& traj, double window_fraction = 0.25);

/// Earliest time after which every per-cycle amplitude stays within tol of
/// the final-cycles mean; nullopt if the run never settles.
std::optional<double> settle_time(const Trajectory& traj, double drive_period, double tol,
                                  int final_cycles);

struct SweepPoint {
    double omega = 0.0;      ///< drive frequency of this point [rad/s]
    double amplitude = 0.0;  ///< steady amplitude [rad]; NaN when not valid
    bool settled = false;
    bool valid = false;  ///< false: non-positive frequency or numerical blow-up
};

/// One full simulation per frequency, sharing p's geometry and damping (b is
/// deliberately not recalibrated per point: one physical mechanism, swept on
/// the bench). cfg is interpreted relative to p.omega's period and rescaled
/// per point so every frequency runs the same steps-per-cycle and cycle
/// count. Points run concurrently; output order matches input order and is
/// deterministic. Failed points are marked, they never abort the sweep.
std::vector<SweepPoint> resonance_curve(const StrokeParams& p, const std::vector<double>& omegas,
                                        const IntegrationConfig& cfg, int n_cycles = 25,
                                        double tol = 0.02);

/// Windows and tolerances for summarize().
struct AnalysisSettings {
    int window_cycles = 25;    ///< amplitude / phase measurement window
    int settle_cycles = 10;    ///< settledness is judged on this many cycles
    double settle_tol = 0.02;  ///< relative per-cycle amplitude variation

    bool operator==(const AnalysisSettings&) const = default;
};

AnalysisSettings validate(const AnalysisSettings& a);

/// Scalar results of one run. Angles in radians, times in seconds.
struct SimSummary {
    ModelKind model = ModelKind::synthetic;
    double steady_amplitude_rad = 0.0;
    bool settled = false;
    std::optional<double> settle_time_s;  ///< empty when the run never settles
    double phase_lag_rad = 0.0;           ///< fundamental vs the drive
    double peak_angle_rad = 0.0;          ///< envelope peak over the window
    double peak_rate_rad_s = 0.0;
    std::optional<TorquePeaks> torque_peaks;  ///< pitch runs only [N m]
};

SimSummary summarize(const Trajectory& traj, double drive_omega, const AnalysisSettings& opts);

/// Pitch overload: adds the per-term torque peaks over the analysis window.
SimSummary summarize(const Trajectory& traj, const PitchParams& p, const AnalysisSettings& opts);

}  // namespace flapsim
