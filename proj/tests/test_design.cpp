#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fixtures.hpp"
#include "flapsim/analysis.hpp"
#include "flapsim/design.hpp"
#include "flapsim/integrator.hpp"

using namespace flapsim;
using std::numbers::pi;

namespace {

// Cheap-but-adequate effort for searches inside the unit tests.
StrokeDesignOptions fast_options() {
    StrokeDesignOptions opt;
    opt.grid_points = 5;
    opt.tolerance = 0.05;
    opt.steps_per_cycle = 500;
    opt.cycles = 40;
    opt.window_cycles = 10;
    return opt;
}

StrokeDesignInputs design_point_inputs() {
    StrokeDesignInputs in;
    in.z_max = 0.8e-3;
    in.m_r = 2.0e-6;
    in.L_w = 4.4e-3;
    in.target_amplitude = pi / 3.0;
    return in;
}

}  // namespace

TEST_CASE("resonant mass for the 70 Hz bench tuning") {
    const double m = solve_resonant_mass(20.0e-6, 2.5e-3, 70.0);
    CHECK(m == doctest::Approx(1.6542234064055148e-5).epsilon(1e-13));
    CHECK(m > 15.0e-6);
    CHECK(m < 18.0e-6);

    // Round trip: that mass really is resonant at 70 Hz.
    StrokeParams p;
    p.m_r = m;
    p.L = 2.5e-3;
    p.k_t = 20.0e-6;
    CHECK(natural_frequency(p) / (2.0 * pi) == doctest::Approx(70.0).epsilon(1e-12));
}

TEST_CASE("resonant mass scaling") {
    const double base = solve_resonant_mass(20.0e-6, 2.5e-3, 70.0);
    CHECK(solve_resonant_mass(40.0e-6, 2.5e-3, 70.0) ==
          doctest::Approx(2.0 * base).epsilon(1e-12));
    CHECK(solve_resonant_mass(20.0e-6, 5.0e-3, 70.0) ==
          doctest::Approx(base / 4.0).epsilon(1e-12));
    CHECK(solve_resonant_mass(20.0e-6, 2.5e-3, 140.0) ==
          doctest::Approx(base / 4.0).epsilon(1e-12));
}

TEST_CASE("resonant mass input validation") {
    CHECK_THROWS_AS(solve_resonant_mass(0.0, 2.5e-3, 70.0), ValidationError);
    CHECK_THROWS_AS(solve_resonant_mass(20.0e-6, -1.0, 70.0), ValidationError);
    try {
        solve_resonant_mass(0.0, 0.0, 0.0);
        FAIL("expected ValidationError");
    } catch (const ValidationError& err) {
        CHECK(err.violations().size() == 3);
    }
}

TEST_CASE("stroke design search finds the 60 degree design point") {
    const StrokeDesignInputs in = design_point_inputs();
    const SearchBounds bounds{1.5e-3, 3.5e-3, 5.0e-6, 40.0e-6};
    const StrokeDesignResult r = solve_stroke_design(in, bounds, fast_options());

    CHECK(std::abs(r.residual) <= 0.05);
    CHECK(r.amplitude == doctest::Approx(pi / 3.0).epsilon(0.05));
    CHECK(r.L >= bounds.L_min);
    CHECK(r.L <= bounds.L_max);
    CHECK(r.k_t >= bounds.k_t_min);
    CHECK(r.k_t <= bounds.k_t_max);
    CHECK(r.evaluations > 25);  // full grid plus at least one refinement

    // Internal consistency of the returned design.
    CHECK(r.omega == doctest::Approx(std::sqrt(r.k_t / (in.m_r * r.L * r.L))).epsilon(1e-12));
    CHECK(r.b == doctest::Approx(calibrate_damping(in.L_w, r.omega, in.z_max)).epsilon(1e-12));
    CHECK(r.residual == doctest::Approx((r.amplitude - in.target_amplitude) /
                                        in.target_amplitude).epsilon(1e-12));
}

TEST_CASE("a pinned search box on the design point is accepted without a bracket") {
    StrokeDesignInputs in = design_point_inputs();
    const SearchBounds pinned{2.5e-3, 2.5e-3, 20.0e-6, 20.0e-6};
    StrokeDesignOptions opt = fast_options();
    opt.grid_points = 2;
    const StrokeDesignResult r = solve_stroke_design(in, pinned, opt);
    CHECK(r.L == 2.5e-3);
    CHECK(r.k_t == 20.0e-6);
    CHECK(std::abs(r.residual) <= opt.tolerance);
    CHECK(r.evaluations == 4);  // the degenerate 2x2 grid, no bisection possible
}

TEST_CASE("an infeasible box raises NoSolutionError with the best attempt") {
    const StrokeDesignInputs in = design_point_inputs();
    // Everything in this box is far too stiff: amplitudes land well above target.
    const SearchBounds bounds{2.0e-3, 3.0e-3, 100.0e-6, 200.0e-6};
    StrokeDesignOptions opt = fast_options();
    opt.grid_points = 3;
    try {
        solve_stroke_design(in, bounds, opt);
        FAIL("expected NoSolutionError");
    } catch (const NoSolutionError& err) {
        CHECK(err.best_residual() > 0.5);
        CHECK(err.best_L() >= bounds.L_min);
        CHECK(err.best_L() <= bounds.L_max);
        CHECK(err.best_k_t() >= bounds.k_t_min);
        CHECK(err.best_k_t() <= bounds.k_t_max);
        CHECK(std::string(err.what()).find("best residual") != std::string::npos);
    }
}

TEST_CASE("stroke design search validates its inputs") {
    const SearchBounds bounds{1.5e-3, 3.5e-3, 5.0e-6, 40.0e-6};
    StrokeDesignInputs in = design_point_inputs();
    in.target_amplitude = 0.0;
    CHECK_THROWS_AS(solve_stroke_design(in, bounds, fast_options()), ValidationError);
    in.target_amplitude = 4.0;  // beyond pi
    CHECK_THROWS_AS(solve_stroke_design(in, bounds, fast_options()), ValidationError);

    in = design_point_inputs();
    CHECK_THROWS_AS(solve_stroke_design(in, SearchBounds{3.0e-3, 2.0e-3, 5.0e-6, 40.0e-6},
                                        fast_options()),
                    ValidationError);
    StrokeDesignOptions opt = fast_options();
    opt.grid_points = 1;
    CHECK_THROWS_AS(solve_stroke_design(in, bounds, opt), ValidationError);
    opt = fast_options();
    opt.cycles = opt.window_cycles;  // no transient left to discard
    CHECK_THROWS_AS(solve_stroke_design(in, bounds, opt), ValidationError);
}

TEST_CASE("pivot stiffness of the 16-beam stainless shim") {
    using flapsim::PivotTopology;
    CHECK(pivot_stiffness(fixtures::table_pivot(PivotTopology::serial_torsion)) ==
          doctest::Approx(8.57375e-6).epsilon(1e-12));
    CHECK(pivot_stiffness(fixtures::table_pivot(PivotTopology::parallel_bending)) ==
          doctest::Approx(1.412039466666666e-3).epsilon(1e-12));
    CHECK(pivot_stiffness(fixtures::table_pivot(PivotTopology::parallel_torsion)) ==
          doctest::Approx(2.19488e-3).epsilon(1e-12));
}

TEST_CASE("pivot stiffness scaling laws are exact") {
    for (auto topology : {PivotTopology::parallel_bending, PivotTopology::serial_torsion,
                          PivotTopology::parallel_torsion}) {
        const PivotSpec base = fixtures::table_pivot(topology);
        const double k0 = pivot_stiffness(base);

        PivotSpec thick = base;
        thick.beam_thickness *= 2.0;  // still below the width
        CHECK(pivot_stiffness(thick) == doctest::Approx(8.0 * k0).epsilon(1e-12));

        PivotSpec wide = base;
        wide.beam_width *= 2.0;
        CHECK(pivot_stiffness(wide) == doctest::Approx(2.0 * k0).epsilon(1e-12));

        PivotSpec lengthened = base;
        lengthened.beam_length *= 2.0;
        CHECK(pivot_stiffness(lengthened) == doctest::Approx(0.5 * k0).epsilon(1e-12));

        PivotSpec more = base;
        more.n_beams *= 2;
        const double expect =
            topology == PivotTopology::serial_torsion ? 0.5 * k0 : 2.0 * k0;
        CHECK(pivot_stiffness(more) == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("pivot stress at the 60 degree working deflection") {
    const double max_angle = pi / 3.0;
    const double k_t = 20.0e-6;

    const StressCheck serial =
        pivot_stress_check(fixtures::table_pivot(PivotTopology::serial_torsion), max_angle, k_t);
    CHECK(serial.peak_stress == doctest::Approx(435123636.23127323).epsilon(1e-12));
    CHECK(serial.within_budget);  // 0.44 GPa against the 0.8 GPa budget

    const StressCheck bending = pivot_stress_check(
        fixtures::table_pivot(PivotTopology::parallel_bending), max_angle, k_t);
    const StressCheck torsion = pivot_stress_check(
        fixtures::table_pivot(PivotTopology::parallel_torsion), max_angle, k_t);
    CHECK(bending.within_budget);
    CHECK(torsion.within_budget);

    // Same per-beam torque, bending carries twice the surface stress of
    // torsion; serial beams see the full torque, 16 times the parallel share.
    CHECK(bending.peak_stress == doctest::Approx(2.0 * torsion.peak_stress).epsilon(1e-12));
    CHECK(serial.peak_stress == doctest::Approx(16.0 * torsion.peak_stress).epsilon(1e-12));
}

TEST_CASE("stress budget verdict flips exactly at the budget") {
    PivotSpec s = fixtures::table_pivot(PivotTopology::serial_torsion);
    const StressCheck at_default = pivot_stress_check(s, pi / 3.0, 20.0e-6);

    s.stress_budget = at_default.peak_stress;  // exactly at the line: still ok
    CHECK(pivot_stress_check(s, pi / 3.0, 20.0e-6).within_budget);
    s.stress_budget = at_default.peak_stress * 0.999;
    CHECK_FALSE(pivot_stress_check(s, pi / 3.0, 20.0e-6).within_budget);
}

TEST_CASE("pivot stress input validation") {
    const PivotSpec s = fixtures::table_pivot(PivotTopology::serial_torsion);
    CHECK_THROWS_AS(pivot_stress_check(s, -0.1, 20.0e-6), ValidationError);
    CHECK_THROWS_AS(pivot_stress_check(s, pi / 3.0, 0.0), ValidationError);
    // Zero deflection is fine and stress-free.
    const StressCheck unloaded = pivot_stress_check(s, 0.0, 20.0e-6);
    CHECK(unloaded.peak_stress == 0.0);
    CHECK(unloaded.within_budget);
}
