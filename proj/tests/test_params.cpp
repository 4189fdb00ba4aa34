#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "fixtures.hpp"
#include "flapsim/params.hpp"

using namespace flapsim;
using std::numbers::pi;

TEST_CASE("design-point stroke parameters validate and expose inertia") {
    const StrokeParams p = validate(fixtures::design_stroke());
    CHECK(p.inertia() == doctest::Approx(1.25e-11).epsilon(1e-14));
    CHECK(p.drive_period() == doctest::Approx(2.0 * pi / p.omega).epsilon(1e-15));
}

TEST_CASE("stroke natural frequency at the design point") {
    const StrokeParams p = fixtures::design_stroke();
    const double w = natural_frequency(p);
    CHECK(w == doctest::Approx(1264.9110640673518).epsilon(1e-13));
    CHECK(w / (2.0 * pi) == doctest::Approx(201.31684841794817).epsilon(1e-13));
}

TEST_CASE("stroke natural frequency with the bench tuning mass") {
    // 16.5 mg at the same radius and stiffness lands close to 70 Hz.
    StrokeParams p = fixtures::design_stroke();
    p.m_r = 16.5e-6;
    const double f = natural_frequency(p) / (2.0 * pi);
    CHECK(f == doctest::Approx(70.0).epsilon(0.002));
}

TEST_CASE("natural frequency scaling laws") {
    const StrokeParams base = fixtures::design_stroke();
    const double w0 = natural_frequency(base);

    // Scaling k_t and m_r together leaves the frequency unchanged.
    StrokeParams scaled = base;
    scaled.k_t *= 3.7;
    scaled.m_r *= 3.7;
    CHECK(natural_frequency(scaled) == doctest::Approx(w0).epsilon(1e-12));

    // Quadrupling the mass halves it; doubling L likewise.
    StrokeParams heavy = base;
    heavy.m_r *= 4.0;
    CHECK(natural_frequency(heavy) == doctest::Approx(w0 / 2.0).epsilon(1e-12));
    StrokeParams longer = base;
    longer.L *= 2.0;
    CHECK(natural_frequency(longer) == doctest::Approx(w0 / 2.0).epsilon(1e-12));
}

TEST_CASE("stroke validation reports each bad field by name") {
    StrokeParams p = fixtures::design_stroke();
    p.m_r = 0.0;
    p.L = -1.0;
    try {
        validate(p);
        FAIL("expected ValidationError");
    } catch (const ValidationError& err) {
        REQUIRE(err.violations().size() == 2);
        CHECK(err.violations()[0].find("m_r") != std::string::npos);
        CHECK(err.violations()[1].find("L") != std::string::npos);
    }
}

TEST_CASE("stroke validation allows the undriven and undamped cases") {
    StrokeParams p = fixtures::design_stroke();
    p.z_max = 0.0;
    p.b = 0.0;
    CHECK_NOTHROW(validate(p));
    p.b = -1e-9;
    CHECK_THROWS_AS(validate(p), ValidationError);
}

TEST_CASE("stroke validation rejects non-finite values") {
    StrokeParams p = fixtures::design_stroke();
    p.k_t = std::nan("");
    CHECK_THROWS_AS(validate(p), ValidationError);
    p = fixtures::design_stroke();
    p.omega = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(validate(p), ValidationError);
}

TEST_CASE("pitch design point validates; natural frequency near the drive") {
    const PitchParams p = validate(fixtures::design_pitch());
    CHECK(p.inertia() == doctest::Approx(1e-10).epsilon(1e-14));
    const double w = natural_frequency(p);
    CHECK(w == doctest::Approx(447.21359549995793).epsilon(1e-13));
    CHECK(w / (2.0 * pi) == doctest::Approx(71.176254341717735).epsilon(1e-13));
    // Drive at 70 Hz sits just below pitch resonance, ratio ~0.983.
    CHECK(p.omega / w == doctest::Approx(0.9834).epsilon(1e-3));
}

TEST_CASE("with_peak_aero_force pins the peak aerodynamic force") {
    const PitchParams p = fixtures::design_pitch();
    CHECK(p.b * p.L_w * p.A * p.omega == doctest::Approx(1.0e-3).epsilon(1e-14));
    CHECK(p.b == doctest::Approx(7.2372274030241266e-4).epsilon(1e-13));

    // Doubling the requested force doubles b, all else equal.
    const PitchParams q = PitchParams::with_peak_aero_force(p.m, p.l, p.k, p.p, p.L_w, p.A,
                                                            p.omega, 2.0e-3);
    CHECK(q.b == doctest::Approx(2.0 * p.b).epsilon(1e-14));
}

TEST_CASE("pitch validation bounds the stroke amplitude") {
    PitchParams p = fixtures::design_pitch();
    p.A = pi;  // exactly pi is the limit
    CHECK_NOTHROW(validate(p));
    p.A = pi + 1e-6;
    CHECK_THROWS_AS(validate(p), ValidationError);
    p.A = 0.0;  // no stroke: free oscillation, allowed
    CHECK_NOTHROW(validate(p));
    p.A = -0.1;
    CHECK_THROWS_AS(validate(p), ValidationError);
}

TEST_CASE("pivot spec validation") {
    CHECK_NOTHROW(validate(fixtures::table_pivot(PivotTopology::serial_torsion)));

    PivotSpec s = fixtures::table_pivot(PivotTopology::serial_torsion);
    s.n_beams = 0;
    CHECK_THROWS_AS(validate(s), ValidationError);

    s = fixtures::table_pivot(PivotTopology::serial_torsion);
    s.beam_thickness = s.beam_width * 1.5;  // thin-strip formulas need t <= w
    try {
        validate(s);
        FAIL("expected ValidationError");
    } catch (const ValidationError& err) {
        REQUIRE(err.violations().size() == 1);
        CHECK(err.violations()[0].find("beam_thickness") != std::string::npos);
    }

    s = fixtures::table_pivot(PivotTopology::serial_torsion);
    s.stress_budget = 0.0;
    CHECK_THROWS_AS(validate(s), ValidationError);
}

TEST_CASE("topology names round-trip to their config spellings") {
    CHECK(to_string(PivotTopology::parallel_bending) == "parallel-bending");
    CHECK(to_string(PivotTopology::serial_torsion) == "serial-torsion");
    CHECK(to_string(PivotTopology::parallel_torsion) == "parallel-torsion");
}
