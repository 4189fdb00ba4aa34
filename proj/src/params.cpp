#include "flapsim/params.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace flapsim {

namespace {

void require_positive(std::vector<std::string>& out, double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        out.push_back(std::string(name) + " must be strictly positive, got " + std::to_string(v));
    }
}

void require_nonnegative(std::vector<std::string>& out, double v, const char* name) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
        out.push_back(std::string(name) + " must be non-negative, got " + std::to_string(v));
    }
}

}  // namespace

double StrokeParams::drive_period() const { return 2.0 * std::numbers::pi / omega; }

PitchParams PitchParams::with_peak_aero_force(double m, double l, double k, double p, double L_w,
                                              double A, double omega, double peak_force) {
    PitchParams out{m, l, k, p, L_w, 0.0, A, omega};
    out.b = peak_force / (L_w * A * omega);
    return out;
}

std::string to_string(PivotTopology t) {
    switch (t) {
        case PivotTopology::parallel_bending: return "parallel-bending";
        case PivotTopology::serial_torsion: return "serial-torsion";
        case PivotTopology::parallel_torsion: return "parallel-torsion";
    }
    return "unknown";
}

StrokeParams validate(const StrokeParams& p) {
    std::vector<std::string> v;
    require_positive(v, p.m_r, "m_r");
    require_positive(v, p.L, "L");
    require_positive(v, p.k_t, "k_t");
    require_positive(v, p.L_w, "L_w");
    require_nonnegative(v, p.b, "b");
    require_nonnegative(v, p.z_max, "z_max");
    require_positive(v, p.omega, "omega");
    if (!v.empty()) throw ValidationError(std::move(v));
    return p;
}

PitchParams validate(const PitchParams& p) {
    std::vector<std::string> v;
    require_positive(v, p.m, "m");
    require_positive(v, p.l, "l");
    require_positive(v, p.k, "k");
    require_positive(v, p.p, "p");
    require_positive(v, p.L_w, "L_w");
    require_nonnegative(v, p.b, "b");
    require_nonnegative(v, p.A, "A");
    if (p.A > std::numbers::pi) {
        v.push_back("A must not exceed pi radians, got " + std::to_string(p.A));
    }
    require_positive(v, p.omega, "omega");
    if (!v.empty()) throw ValidationError(std::move(v));
    return p;
}

PivotSpec validate(const PivotSpec& s) {
    std::vector<std::string> v;
    if (s.n_beams < 1) {
        v.push_back("n_beams must be at least 1, got " + std::to_string(s.n_beams));
    }
    require_positive(v, s.beam_length, "beam_length");
    require_positive(v, s.beam_width, "beam_width");
    require_positive(v, s.beam_thickness, "beam_thickness");
    if (std::isfinite(s.beam_thickness) && std::isfinite(s.beam_width) &&
        s.beam_thickness > 0.0 && s.beam_width > 0.0 && s.beam_thickness > s.beam_width) {
        v.push_back("beam_thickness must not exceed beam_width (thin-strip section assumed)");
    }
    require_positive(v, s.elastic_modulus, "elastic_modulus");
    require_positive(v, s.shear_modulus, "shear_modulus");
    require_positive(v, s.stress_budget, "stress_budget");
    if (!v.empty()) throw ValidationError(std::move(v));
    return s;
}

double natural_frequency(const StrokeParams& p) { return std::sqrt(p.k_t / p.inertia()); }

double natural_frequency(const PitchParams& p) { return std::sqrt(p.k / p.inertia()); }

}  // namespace flapsim
