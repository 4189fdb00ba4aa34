#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "flapsim/analysis.hpp"
#include "flapsim/integrator.hpp"
#include "flapsim/stroke.hpp"

using namespace flapsim;
using std::numbers::pi;

namespace {

// Hand-built sinusoid with an optional amplitude envelope.
Trajectory make_sine(double amplitude, double omega, double phase, int cycles,
                     int samples_per_cycle,
                     const std::function<double(double)>& envelope = nullptr) {
    const double T = 2.0 * pi / omega;
    const double dt = T / samples_per_cycle;
    std::vector<SimState> samples;
    const int n = cycles * samples_per_cycle;
    samples.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        const double t = i * dt;
        const double a = amplitude * (envelope ? envelope(t) : 1.0);
        samples.push_back({t, a * std::sin(omega * t + phase), a * omega * std::cos(omega * t + phase)});
    }
    return Trajectory(ModelKind::synthetic, std::move(samples));
}

Trajectory design_run(const StrokeParams& p, int cycles, int steps) {
    const double T = p.drive_period();
    const StrokeDrive drive = drive_of(p);
    return integrate([&](const SimState& s) { return stroke_rhs(s, p, drive); }, SimState{},
                     IntegrationConfig{T / steps, cycles * T, T / steps, Method::rk4},
                     ModelKind::stroke);
}

}  // namespace

TEST_CASE("steady amplitude recovers synthetic sinusoids") {
    const double omega = 2.0 * pi * 70.0;
    for (double amplitude : {0.1, 0.7, 1.3}) {
        for (double phase : {0.0, 1.1, pi / 2.0}) {
            const Trajectory traj = make_sine(amplitude, omega, phase, 30, 1000);
            const AmplitudeResult r = steady_amplitude(traj, 2.0 * pi / omega, 10, 0.01);
            CHECK(r.amplitude == doctest::Approx(amplitude).epsilon(1e-6));
            CHECK(r.settled);
            CHECK(r.per_cycle.size() == 10);
        }
    }
}

TEST_CASE("steady amplitude of silence is settled zero") {
    std::vector<SimState> samples;
    for (int i = 0; i <= 1000; ++i) samples.push_back({i * 1e-4, 0.0, 0.0});
    const Trajectory traj(ModelKind::synthetic, std::move(samples));
    const AmplitudeResult r = steady_amplitude(traj, 1e-2, 5, 0.02);
    CHECK(r.amplitude == 0.0);
    CHECK(r.settled);
}

TEST_CASE("steady amplitude flags a breathing envelope as unsettled") {
    const double omega = 2.0 * pi * 70.0;
    const double T = 2.0 * pi / omega;
    const Trajectory traj = make_sine(1.0, omega, 0.0, 30, 500,
                                      [&](double t) { return 1.0 + t / (30.0 * T); });
    const AmplitudeResult r = steady_amplitude(traj, T, 10, 0.02);
    CHECK_FALSE(r.settled);
    CHECK(settle_time(traj, T, 0.02, 10) == std::nullopt);
}

TEST_CASE("measurement windows must fit the trajectory") {
    const double omega = 2.0 * pi * 70.0;
    const Trajectory traj = make_sine(1.0, omega, 0.0, 5, 200);
    CHECK_THROWS_AS(steady_amplitude(traj, 2.0 * pi / omega, 10, 0.02), ValidationError);
    CHECK_THROWS_AS(steady_amplitude(traj, 2.0 * pi / omega, 3, 0.0), ValidationError);
    CHECK_THROWS_AS(phase_lag(traj, omega, 0.0, 10), ValidationError);
    CHECK_THROWS_AS(peak_angle(traj, 0.0), ValidationError);
    CHECK_THROWS_AS(peak_angle(traj, 1.5), ValidationError);
}

TEST_CASE("phase lag of shifted sinusoids") {
    const double omega = 2.0 * pi * 70.0;
    // Response sin(omega t - delta) lags the drive sin(omega t) by delta.
    for (double delta : {0.0, 0.4, pi / 2.0, -0.9}) {
        const Trajectory traj = make_sine(0.8, omega, -delta, 24, 1000);
        CHECK(phase_lag(traj, omega, 0.0, 8) == doctest::Approx(-delta).epsilon(1e-3));
    }
}

TEST_CASE("phase lag ignores overall signal scale") {
    const double omega = 2.0 * pi * 70.0;
    // Power-of-two amplitudes commute with every intermediate rounding, so
    // the two projections scale exactly and the result is bitwise identical.
    const Trajectory small = make_sine(0x1p-13, omega, -0.7, 24, 1000);
    const Trajectory large = make_sine(0x1p10, omega, -0.7, 24, 1000);
    CHECK(phase_lag(small, omega) == phase_lag(large, omega));
}

TEST_CASE("phase lag default window is the trailing quarter of the run") {
    const double omega = 2.0 * pi * 70.0;
    const Trajectory traj = make_sine(1.0, omega, -0.5, 40, 500);
    CHECK(phase_lag(traj, omega) == phase_lag(traj, omega, 0.0, 10));
}

TEST_CASE("phase lag result stays in (-pi, pi]") {
    const double omega = 2.0 * pi * 70.0;
    const Trajectory traj = make_sine(1.0, omega, pi, 24, 1000);  // exactly out of phase
    const double lag = phase_lag(traj, omega, 0.0, 8);
    CHECK(lag <= pi);
    CHECK(lag > -pi);
    CHECK(std::abs(lag) == doctest::Approx(pi).epsilon(1e-3));
}

TEST_CASE("peak angle and rate of a synthetic sinusoid") {
    const double omega = 2.0 * pi * 70.0;
    const Trajectory traj = make_sine(0.9, omega, 0.3, 20, 1000);
    CHECK(peak_angle(traj) == doctest::Approx(0.9).epsilon(1e-6));
    CHECK(peak_rate(traj) == doctest::Approx(0.9 * omega).epsilon(1e-6));
}

TEST_CASE("settle time of a decaying transient") {
    const double omega = 2.0 * pi * 70.0;
    const double T = 2.0 * pi / omega;
    const Trajectory traj = make_sine(1.0, omega, 0.0, 30, 500, [&](double t) {
        return 1.0 + std::exp(-t / (2.0 * T));
    });
    const auto settle = settle_time(traj, T, 0.02, 10);
    REQUIRE(settle.has_value());
    CHECK(*settle > 6.0 * T);
    CHECK(*settle < 12.0 * T);
    // A tighter tolerance settles later.
    const auto strict = settle_time(traj, T, 0.005, 10);
    REQUIRE(strict.has_value());
    CHECK(*strict > *settle);
}

TEST_CASE("resonance curve peaks at the natural frequency") {
    const StrokeParams p = fixtures::design_stroke();
    const double T = p.drive_period();
    const IntegrationConfig cfg{T / 1000.0, 40.0 * T, T / 1000.0, Method::rk4};
    const std::vector<double> omegas{0.8 * p.omega, p.omega, 1.2 * p.omega};
    const auto curve = resonance_curve(p, omegas, cfg, 10, 0.05);
    REQUIRE(curve.size() == 3);
    for (const SweepPoint& pt : curve) {
        CHECK(pt.valid);
        CHECK(std::isfinite(pt.amplitude));
    }
    CHECK(curve[1].amplitude > curve[0].amplitude);
    CHECK(curve[1].amplitude > curve[2].amplitude);
    CHECK(curve[0].omega == omegas[0]);
    CHECK(curve[2].omega == omegas[2]);
}

TEST_CASE("resonance curve is order-independent and matches a direct run") {
    const StrokeParams p = fixtures::design_stroke();
    const double T = p.drive_period();
    const IntegrationConfig cfg{T / 500.0, 30.0 * T, T / 500.0, Method::rk4};
    const std::vector<double> fwd{0.9 * p.omega, p.omega, 1.1 * p.omega};
    const std::vector<double> rev{1.1 * p.omega, p.omega, 0.9 * p.omega};
    const auto a = resonance_curve(p, fwd, cfg, 8, 0.05);
    const auto b = resonance_curve(p, rev, cfg, 8, 0.05);
    CHECK(a[0].amplitude == b[2].amplitude);  // bitwise: same sim either way
    CHECK(a[1].amplitude == b[1].amplitude);
    CHECK(a[2].amplitude == b[0].amplitude);

    // A single-point sweep equals the same measurement done by hand.
    const auto single = resonance_curve(p, {p.omega}, cfg, 8, 0.05);
    const Trajectory direct = design_run(p, 30, 500);
    const double expect = steady_amplitude(direct, T, 8, 0.05).amplitude;
    CHECK(single[0].amplitude == expect);
}

TEST_CASE("resonance curve marks unusable frequencies instead of failing") {
    const StrokeParams p = fixtures::design_stroke();
    const double T = p.drive_period();
    const IntegrationConfig cfg{T / 500.0, 30.0 * T, T / 500.0, Method::rk4};
    const auto curve = resonance_curve(p, {0.0, -5.0, p.omega}, cfg, 8, 0.05);
    CHECK_FALSE(curve[0].valid);
    CHECK(std::isnan(curve[0].amplitude));
    CHECK_FALSE(curve[1].valid);
    CHECK(curve[2].valid);
}

TEST_CASE("a blown-up sweep point is marked, not fatal") {
    const StrokeParams p = fixtures::design_stroke();
    const double T = p.drive_period();
    // Two steps per cycle puts rk4 far outside its stability region; the
    // divergence needs a couple thousand cycles to overflow.
    const IntegrationConfig cfg{T / 2.0, 2000.0 * T, T / 2.0, Method::rk4};
    const auto curve = resonance_curve(p, {p.omega, 0.5 * p.omega}, cfg, 10, 0.05);
    CHECK_FALSE(curve[0].valid);
    CHECK(std::isnan(curve[0].amplitude));
    CHECK_FALSE(curve[1].valid);
}

TEST_CASE("more damping flattens the resonance curve") {
    const StrokeParams p = fixtures::design_stroke();
    StrokeParams damped = p;
    damped.b *= 4.0;
    const double T = p.drive_period();
    const IntegrationConfig cfg{T / 1000.0, 40.0 * T, T / 1000.0, Method::rk4};
    const std::vector<double> omegas{0.8 * p.omega, p.omega};
    const auto sharp = resonance_curve(p, omegas, cfg, 10, 0.05);
    const auto flat = resonance_curve(damped, omegas, cfg, 10, 0.05);
    const double sharp_ratio = sharp[1].amplitude / sharp[0].amplitude;
    const double flat_ratio = flat[1].amplitude / flat[0].amplitude;
    CHECK(flat_ratio < sharp_ratio);
}

TEST_CASE("summarize agrees with the individual measurements") {
    const StrokeParams p = fixtures::design_stroke();
    const Trajectory traj = design_run(p, 60, 1000);
    const AnalysisSettings opts{15, 10, 0.02};
    const SimSummary s = summarize(traj, p.omega, opts);
    const double T = p.drive_period();

    CHECK(s.model == ModelKind::stroke);
    CHECK(s.steady_amplitude_rad == steady_amplitude(traj, T, 15, 0.02).amplitude);
    CHECK(s.settled == steady_amplitude(traj, T, 10, 0.02).settled);
    CHECK(s.settled);
    REQUIRE(s.settle_time_s.has_value());
    CHECK(*s.settle_time_s == *settle_time(traj, T, 0.02, 10));
    CHECK(s.phase_lag_rad == phase_lag(traj, p.omega, 0.0, 15));
    CHECK(s.peak_angle_rad >= 0.999 * s.steady_amplitude_rad);
    CHECK(s.peak_rate_rad_s == doctest::Approx(s.steady_amplitude_rad * p.omega).epsilon(0.05));
    CHECK_FALSE(s.torque_peaks.has_value());

    CHECK_THROWS_AS(summarize(traj, p.omega, AnalysisSettings{0, 10, 0.02}), ValidationError);
}

TEST_CASE("analysis settings validation") {
    CHECK_NOTHROW(validate(AnalysisSettings{}));
    CHECK_THROWS_AS(validate(AnalysisSettings{25, 0, 0.02}), ValidationError);
    CHECK_THROWS_AS(validate(AnalysisSettings{25, 10, 0.0}), ValidationError);
}
