#include "flapsim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>

#include "flapsim/stroke.hpp"

namespace flapsim {

namespace {

constexpr double kTimeFuzz = 1e-9;

// Vertex value of the parabola through three equally spaced samples a, b, c.
// Falls back to the middle sample when the points do not bracket an extremum.
double refine_extremum(double a, double b, double c) {
    const double d = a - 2.0 * b + c;
    if (d == 0.0) return b;
    const double offset = 0.5 * (a - c) / d;
    if (std::abs(offset) > 1.0) return b;
    return b - 0.25 * (a - c) * offset;
}

std::size_t index_at_or_after(const Trajectory& traj, double t) {
    const double raw = (t - traj.t_start()) / traj.dt();
    const auto i = static_cast<long>(std::ceil(raw - kTimeFuzz));
    return static_cast<std::size_t>(std::clamp<long>(i, 0, static_cast<long>(traj.size()) - 1));
}

// Half peak-to-peak of one cycle window [i_begin, i_end], inclusive, with
// quadratic refinement of interior extrema.
double cycle_amplitude(const Trajectory& traj, std::size_t i_begin, std::size_t i_end) {
    std::size_t i_max = i_begin;
    std::size_t i_min = i_begin;
    for (std::size_t i = i_begin; i <= i_end; ++i) {
        if (traj[i].angle > traj[i_max].angle) i_max = i;
        if (traj[i].angle < traj[i_min].angle) i_min = i;
    }
    auto refined = [&](std::size_t j) {
        if (j == 0 || j + 1 >= traj.size()) return traj[j].angle;
        return refine_extremum(traj[j - 1].angle, traj[j].angle, traj[j + 1].angle);
    };
    return 0.5 * (refined(i_max) - refined(i_min));
}

std::vector<double> per_cycle_amplitudes(const Trajectory& traj, double drive_period,
                                         int n_cycles) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n_cycles));
    const double t_end = traj.t_end();
    for (int k = 0; k < n_cycles; ++k) {
        const double t_lo = t_end - (n_cycles - k) * drive_period;
        const double t_hi = t_lo + drive_period;
        const std::size_t i_begin = index_at_or_after(traj, t_lo);
        std::size_t i_end = index_at_or_after(traj, t_hi);
        if (i_end > i_begin && traj[i_end].t > t_hi + kTimeFuzz * drive_period) --i_end;
        out.push_back(cycle_amplitude(traj, i_begin, i_end));
    }
    return out;
}

void require_window_fits(const Trajectory& traj, double drive_period, int n_cycles,
                         const char* what) {
    std::vector<std::string> v;
    if (!(drive_period > 0.0) || !std::isfinite(drive_period)) {
        v.push_back("drive period must be strictly positive");
    }
    if (n_cycles < 1) v.push_back(std::string(what) + " needs at least 1 cycle");
    if (v.empty()) {
        const double duration = traj.t_end() - traj.t_start();
        if (duration + kTimeFuzz * drive_period < n_cycles * drive_period) {
            v.push_back(std::string(what) + ": trajectory covers " + std::to_string(duration) +
                        " s, need " + std::to_string(n_cycles) + " cycles of " +
                        std::to_string(drive_period) + " s");
        }
    }
    if (!v.empty()) throw ValidationError(std::move(v));
}

bool within_tol_of_mean(const std::vector<double>& amps, double mean, double tol) {
    if (mean == 0.0) {
        return std::all_of(amps.begin(), amps.end(), [](double a) { return a == 0.0; });
    }
    return std::all_of(amps.begin(), amps.end(),
                       [&](double a) { return std::abs(a - mean) <= tol * mean; });
}

double window_peak(const Trajectory& traj, double window_fraction,
                   double (*value)(const SimState&)) {
    if (!(window_fraction > 0.0 && window_fraction <= 1.0)) {
        throw ValidationError({"window_fraction must be in (0, 1], got " +
                               std::to_string(window_fraction)});
    }
    const double t_from = traj.t_end() - window_fraction * (traj.t_end() - traj.t_start());
    std::size_t i_peak = traj.size() - 1;
    double best = -1.0;
    for (std::size_t i = index_at_or_after(traj, t_from); i < traj.size(); ++i) {
        if (std::abs(value(traj[i])) > best) {
            best = std::abs(value(traj[i]));
            i_peak = i;
        }
    }
    if (i_peak == 0 || i_peak + 1 >= traj.size()) return best;
    return std::abs(refine_extremum(value(traj[i_peak - 1]), value(traj[i_peak]),
                                    value(traj[i_peak + 1])));
}

}  // namespace

AmplitudeResult steady_amplitude(const Trajectory& traj, double drive_period, int n_cycles,
                                 double tol) {
    require_window_fits(traj, drive_period, n_cycles, "steady_amplitude");
    if (!(tol > 0.0)) throw ValidationError({"tol must be strictly positive"});

    AmplitudeResult out;
    out.per_cycle = per_cycle_amplitudes(traj, drive_period, n_cycles);
    double sum = 0.0;
    for (double a : out.per_cycle) sum += a;
    out.amplitude = sum / static_cast<double>(out.per_cycle.size());
    out.settled = within_tol_of_mean(out.per_cycle, out.amplitude, tol);
    return out;
}

double phase_lag(const Trajectory& traj, double drive_omega, double drive_phase, int n_cycles) {
    if (!(drive_omega > 0.0) || !std::isfinite(drive_omega)) {
        throw ValidationError({"drive_omega must be strictly positive"});
    }
    const double period = 2.0 * std::numbers::pi / drive_omega;
    const double duration = traj.t_end() - traj.t_start();
    const int available = static_cast<int>(std::floor(duration / period + kTimeFuzz));
    if (n_cycles == 0) n_cycles = std::max(1, available / 4);
    require_window_fits(traj, period, n_cycles, "phase_lag");

    const double t_lo = traj.t_end() - n_cycles * period;
    double in_phase = 0.0;
    double quadrature = 0.0;
    for (std::size_t i = index_at_or_after(traj, t_lo); i < traj.size(); ++i) {
        const double arg = drive_omega * traj[i].t + drive_phase;
        in_phase += traj[i].angle * std::sin(arg);
        quadrature += traj[i].angle * std::cos(arg);
    }
    const double lag = std::atan2(quadrature, in_phase);
    return lag == -std::numbers::pi ? std::numbers::pi : lag;
}

double peak_angle(const Trajectory& traj, double window_fraction) {
    return window_peak(traj, window_fraction, [](const SimState& s) { return s.angle; });
}

double peak_rate(const Trajectory& traj, double window_fraction) {
    return window_peak(traj, window_fraction, [](const SimState& s) { return s.rate; });
}

std::optional<double> settle_time(const Trajectory& traj, double drive_period, double tol,
                                  int final_cycles) {
    require_window_fits(traj, drive_period, final_cycles, "settle_time");
    const double duration = traj.t_end() - traj.t_start();
    const int total = static_cast<int>(std::floor(duration / drive_period + kTimeFuzz));
    const auto amps = per_cycle_amplitudes(traj, drive_period, total);

    double ref = 0.0;
    for (int k = total - final_cycles; k < total; ++k) ref += amps[static_cast<std::size_t>(k)];
    ref /= static_cast<double>(final_cycles);

    int first_ok = total;
    for (int k = total; k-- > 0;) {
        const double a = amps[static_cast<std::size_t>(k)];
        const bool ok = ref == 0.0 ? a == 0.0 : std::abs(a - ref) <= tol * ref;
        if (!ok) break;
        first_ok = k;
    }
    if (first_ok > total - final_cycles) return std::nullopt;
    return traj.t_end() - (total - 1 - first_ok) * drive_period;
}

std::vector<SweepPoint> resonance_curve(const StrokeParams& p, const std::vector<double>& omegas,
                                        const IntegrationConfig& cfg, int n_cycles, double tol) {
    validate(p);
    validate(cfg);
    auto eval_point = [&](double omega) {
        SweepPoint pt;
        pt.omega = omega;
        pt.amplitude = std::numeric_limits<double>::quiet_NaN();
        if (!(omega > 0.0) || !std::isfinite(omega)) return pt;
        const double scale = p.omega / omega;
        StrokeParams q = p;
        q.omega = omega;
        const IntegrationConfig local{cfg.dt * scale, cfg.t_end * scale, cfg.dt_out * scale,
                                      cfg.method};
        try {
            const StrokeDrive drive = drive_of(q);
            const Trajectory traj = integrate(
                [&](const SimState& s) { return stroke_rhs(s, q, drive); }, SimState{}, local,
                ModelKind::stroke);
            const AmplitudeResult amp = steady_amplitude(traj, q.drive_period(), n_cycles, tol);
            pt.amplitude = amp.amplitude;
            pt.settled = amp.settled;
            pt.valid = true;
        } catch (const BlowupError&) {
            // leave the point marked invalid; other points are unaffected
        }
        return pt;
    };

    std::vector<SweepPoint> out(omegas.size());
    if (omegas.size() < 2) {
        for (std::size_t i = 0; i < omegas.size(); ++i) out[i] = eval_point(omegas[i]);
        return out;
    }
    std::vector<std::future<SweepPoint>> tasks;
    tasks.reserve(omegas.size());
    for (double omega : omegas) {
        tasks.push_back(std::async(std::launch::async, eval_point, omega));
    }
    for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i].get();
    return out;
}

AnalysisSettings validate(const AnalysisSettings& a) {
    std::vector<std::string> v;
    if (a.window_cycles < 1) v.push_back("window_cycles must be at least 1");
    if (a.settle_cycles < 1) v.push_back("settle_cycles must be at least 1");
    if (!(a.settle_tol > 0.0)) v.push_back("settle_tol must be strictly positive");
    if (!v.empty()) throw ValidationError(std::move(v));
    return a;
}

SimSummary summarize(const Trajectory& traj, double drive_omega, const AnalysisSettings& opts) {
    validate(opts);
    const double period = 2.0 * std::numbers::pi / drive_omega;
    SimSummary s;
    s.model = traj.label();
    const AmplitudeResult window = steady_amplitude(traj, period, opts.window_cycles,
                                                    opts.settle_tol);
    s.steady_amplitude_rad = window.amplitude;
    s.settled = steady_amplitude(traj, period, opts.settle_cycles, opts.settle_tol).settled;
    s.settle_time_s = settle_time(traj, period, opts.settle_tol, opts.settle_cycles);
    s.phase_lag_rad = phase_lag(traj, drive_omega, 0.0, opts.window_cycles);
    const double duration = traj.t_end() - traj.t_start();
    const double window_fraction =
        std::clamp(opts.window_cycles * period / duration, 1e-6, 1.0);
    s.peak_angle_rad = peak_angle(traj, window_fraction);
    s.peak_rate_rad_s = peak_rate(traj, window_fraction);
    return s;
}

SimSummary summarize(const Trajectory& traj, const PitchParams& p, const AnalysisSettings& opts) {
    SimSummary s = summarize(traj, p.omega, opts);
    const double period = 2.0 * std::numbers::pi / p.omega;
    const double duration = traj.t_end() - traj.t_start();
    const double window_fraction =
        std::clamp(opts.window_cycles * period / duration, 1e-6, 1.0);
    s.torque_peaks = pitch_torque_decomposition(traj, p, window_fraction).peaks;
    return s;
}

}  // namespace flapsim
