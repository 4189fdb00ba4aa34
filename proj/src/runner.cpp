#include "flapsim/runner.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "flapsim/analysis.hpp"
#include "flapsim/design.hpp"
#include "flapsim/integrator.hpp"
#include "flapsim/pitch.hpp"
#include "flapsim/stroke.hpp"
#include "flapsim/units.hpp"

namespace flapsim {

namespace {

using nlohmann::ordered_json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ordered_json json_or_null(const std::optional<double>& v) {
    if (!v) return nullptr;
    return *v;
}

ordered_json metrics_json(const SimSummary& s) {
    ordered_json m;
    m["steady_amplitude_rad"] = s.steady_amplitude_rad;
    m["steady_amplitude_deg"] = units::rad_to_deg(s.steady_amplitude_rad);
    m["peak_angle_rad"] = s.peak_angle_rad;
    m["peak_angle_deg"] = units::rad_to_deg(s.peak_angle_rad);
    m["peak_rate_rad_s"] = s.peak_rate_rad_s;
    m["settled"] = s.settled;
    m["settle_time_s"] = json_or_null(s.settle_time_s);
    m["phase_lag_rad"] = s.phase_lag_rad;
    m["phase_lag_deg"] = units::rad_to_deg(s.phase_lag_rad);
    if (s.torque_peaks) {
        m["torque_peaks"] = {{"spring_Nm", s.torque_peaks->spring},
                             {"aerodynamic_Nm", s.torque_peaks->aerodynamic},
                             {"centripetal_Nm", s.torque_peaks->centripetal}};
    }
    return m;
}

ordered_json stroke_params_json(const StrokeParams& p) {
    return {{"m_r_kg", p.m_r},       {"L_m", p.L},
            {"k_t_Nm_per_rad", p.k_t}, {"L_w_m", p.L_w},
            {"b_Ns_per_m", p.b},      {"z_max_m", p.z_max},
            {"omega_rad_s", p.omega}, {"f_hz", p.omega / (2.0 * std::numbers::pi)},
            {"natural_freq_hz", natural_frequency(p) / (2.0 * std::numbers::pi)}};
}

ordered_json pitch_params_json(const PitchParams& p) {
    return {{"m_kg", p.m},          {"l_m", p.l},
            {"k_Nm_per_rad", p.k},  {"p_m", p.p},
            {"L_w_m", p.L_w},       {"b_Ns_per_m", p.b},
            {"A_rad", p.A},         {"omega_rad_s", p.omega},
            {"f_hz", p.omega / (2.0 * std::numbers::pi)},
            {"natural_freq_hz", natural_frequency(p) / (2.0 * std::numbers::pi)}};
}

ordered_json integration_json(const IntegrationConfig& c) {
    return {{"method", to_string(c.method)},
            {"dt_s", c.dt},
            {"t_end_s", c.t_end},
            {"dt_out_s", c.dt_out}};
}

std::string trajectory_csv(const Trajectory& traj, const PitchParams* pitch_params) {
    std::ostringstream os;
    os << "t_s,angle_rad,rate_rad_s";
    if (pitch_params) os << ",torque_spring_Nm,torque_aero_Nm,torque_centripetal_Nm";
    os << "\n";
    for (const SimState& s : traj.samples()) {
        os << fmt17(s.t) << ',' << fmt17(s.angle) << ',' << fmt17(s.rate);
        if (pitch_params) {
            const PitchTorques q = pitch_torques_at(s, *pitch_params);
            os << ',' << fmt17(q.spring) << ',' << fmt17(q.aerodynamic) << ','
               << fmt17(q.centripetal);
        }
        os << "\n";
    }
    return os.str();
}

std::string sweep_csv(const std::vector<SweepPoint>& points) {
    std::ostringstream os;
    os << "omega_rad_s,f_hz,amplitude_rad,settled,valid\n";
    for (const SweepPoint& pt : points) {
        os << fmt17(pt.omega) << ',' << fmt17(pt.omega / (2.0 * std::numbers::pi)) << ','
           << fmt17(pt.amplitude) << ',' << (pt.settled ? 1 : 0) << ',' << (pt.valid ? 1 : 0)
           << "\n";
    }
    return os.str();
}

class OutputWriter {
public:
    OutputWriter(std::string dir, std::vector<std::string>& written)
        : dir_(std::move(dir)), written_(written) {
        std::filesystem::create_directories(dir_);
    }

    std::string write(const std::string& filename, const std::string& content) {
        const std::string path = (std::filesystem::path(dir_) / filename).string();
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + path);
        out << content;
        written_.push_back(path);
        return path;
    }

private:
    std::string dir_;
    std::vector<std::string>& written_;
};

std::string summary_text(const ordered_json& j) { return j.dump(2) + "\n"; }

Trajectory simulate_stroke(const StrokeParams& p, const IntegrationConfig& ic) {
    const StrokeDrive drive = drive_of(p);
    return integrate([&](const SimState& s) { return stroke_rhs(s, p, drive); }, SimState{}, ic,
                     ModelKind::stroke);
}

Trajectory simulate_pitch(const PitchParams& p, const IntegrationConfig& ic) {
    return integrate([&](const SimState& s) { return pitch_rhs(s, p); }, SimState{}, ic,
                     ModelKind::pitch);
}

}  // namespace

RunResult run_scenario(const ScenarioConfig& cfg, const std::string& output_dir,
                       const std::string& stem) {
    RunResult result;
    OutputWriter out(output_dir, result.files_written);
    const std::string summary_name =
        cfg.output.summary.empty() ? stem + "_summary.json" : cfg.output.summary;
    ordered_json& j = result.summary;
    j["name"] = stem;
    j["mode"] = to_string(cfg.mode);

    switch (cfg.mode) {
        case RunMode::simulate: {
            j["model"] = to_string(*cfg.model);
            if (*cfg.model == ModelKind::stroke) {
                const StrokeParams p = resolve(*cfg.stroke);
                const IntegrationConfig ic = integration_for(cfg.integration, p.drive_period());
                const Trajectory traj = simulate_stroke(p, ic);
                j["params"] = stroke_params_json(p);
                j["integration"] = integration_json(ic);
                j["metrics"] = metrics_json(summarize(traj, p.omega, cfg.analysis));
                j["inertial"] = {{"force_N", inertial_force(p)},
                                 {"torque_Nm", inertial_torque(p)}};
                const std::string csv_name = cfg.output.trajectory.empty()
                                                 ? stem + "_trajectory.csv"
                                                 : cfg.output.trajectory;
                out.write(csv_name, trajectory_csv(traj, nullptr));
            } else {
                const PitchParams p = resolve(*cfg.pitch);
                const double period = 2.0 * std::numbers::pi / p.omega;
                const IntegrationConfig ic = integration_for(cfg.integration, period);
                const Trajectory traj = simulate_pitch(p, ic);
                j["params"] = pitch_params_json(p);
                j["integration"] = integration_json(ic);
                j["metrics"] = metrics_json(summarize(traj, p, cfg.analysis));
                const std::string csv_name = cfg.output.trajectory.empty()
                                                 ? stem + "_trajectory.csv"
                                                 : cfg.output.trajectory;
                out.write(csv_name, trajectory_csv(traj, &p));
            }
            break;
        }
        case RunMode::sweep: {
            const StrokeParams p = resolve(*cfg.stroke);
            std::vector<double> omegas;
            for (double s : cfg.sweep->freq_scale) omegas.push_back(s * p.omega);
            for (double f : cfg.sweep->freqs_hz) omegas.push_back(2.0 * std::numbers::pi * f);
            const IntegrationConfig ic = integration_for(cfg.integration, p.drive_period());
            const std::vector<SweepPoint> points = resonance_curve(
                p, omegas, ic, cfg.analysis.window_cycles, cfg.analysis.settle_tol);

            j["model"] = "stroke";
            j["params"] = stroke_params_json(p);
            j["integration"] = integration_json(ic);
            ordered_json pts = ordered_json::array();
            const SweepPoint* best = nullptr;
            for (const SweepPoint& pt : points) {
                pts.push_back({{"omega_rad_s", pt.omega},
                               {"f_hz", pt.omega / (2.0 * std::numbers::pi)},
                               {"amplitude_rad", pt.valid ? ordered_json(pt.amplitude)
                                                          : ordered_json(nullptr)},
                               {"settled", pt.settled},
                               {"valid", pt.valid}});
                if (pt.valid && (!best || pt.amplitude > best->amplitude)) best = &pt;
            }
            j["points"] = pts;
            if (best) {
                j["peak"] = {{"omega_rad_s", best->omega},
                             {"f_hz", best->omega / (2.0 * std::numbers::pi)},
                             {"amplitude_rad", best->amplitude}};
            }
            const std::string csv_name =
                cfg.output.trajectory.empty() ? stem + "_sweep.csv" : cfg.output.trajectory;
            out.write(csv_name, sweep_csv(points));
            break;
        }
        case RunMode::design: {
            const DesignSettings& d = *cfg.design;
            j["task"] = to_string(d.task);
            if (d.task == DesignTask::resonant_mass) {
                const double m_r = solve_resonant_mass(d.k_t, d.L, d.f_target);
                j["inputs"] = {{"k_t_Nm_per_rad", d.k_t},
                               {"L_m", d.L},
                               {"f_target_hz", d.f_target}};
                j["m_r_kg"] = m_r;
                if (d.verify) {
                    StrokeParams p;
                    p.m_r = m_r;
                    p.L = d.L;
                    p.k_t = d.k_t;
                    p.L_w = d.L_w;
                    p.z_max = d.z_max;
                    p.omega = 2.0 * std::numbers::pi * d.f_target;
                    p.b = calibrate_damping(d.L_w, p.omega, d.z_max);
                    validate(p);
                    const IntegrationConfig ic =
                        integration_for(cfg.integration, p.drive_period());
                    const Trajectory traj = simulate_stroke(p, ic);
                    ordered_json v;
                    v["params"] = stroke_params_json(p);
                    v["integration"] = integration_json(ic);
                    v["metrics"] = metrics_json(summarize(traj, p.omega, cfg.analysis));
                    j["verify"] = v;
                    const std::string csv_name = cfg.output.trajectory.empty()
                                                     ? stem + "_trajectory.csv"
                                                     : cfg.output.trajectory;
                    out.write(csv_name, trajectory_csv(traj, nullptr));
                }
            } else {
                const StrokeDesignInputs inputs{d.z_max, d.m_r, d.L_w, d.target_amplitude,
                                                kDefaultPeakWingForce};
                StrokeDesignOptions options;
                options.tolerance = d.tolerance;
                options.grid_points = d.grid_points;
                j["inputs"] = {{"z_max_m", d.z_max},
                               {"m_r_kg", d.m_r},
                               {"L_w_m", d.L_w},
                               {"target_amplitude_rad", d.target_amplitude},
                               {"bounds", {{"L_min_m", d.bounds.L_min},
                                           {"L_max_m", d.bounds.L_max},
                                           {"k_t_min_Nm_per_rad", d.bounds.k_t_min},
                                           {"k_t_max_Nm_per_rad", d.bounds.k_t_max}}},
                               {"tolerance", d.tolerance}};
                try {
                    const StrokeDesignResult r = solve_stroke_design(inputs, d.bounds, options);
                    j["solved"] = true;
                    j["result"] = {{"L_m", r.L},
                                   {"k_t_Nm_per_rad", r.k_t},
                                   {"omega_rad_s", r.omega},
                                   {"f_hz", r.omega / (2.0 * std::numbers::pi)},
                                   {"b_Ns_per_m", r.b},
                                   {"amplitude_rad", r.amplitude},
                                   {"residual", r.residual},
                                   {"evaluations", r.evaluations}};
                } catch (const NoSolutionError& e) {
                    j["solved"] = false;
                    j["best"] = {{"residual", e.best_residual()},
                                 {"L_m", e.best_L()},
                                 {"k_t_Nm_per_rad", e.best_k_t()}};
                    j["error"] = e.what();
                }
            }
            break;
        }
        case RunMode::pivot: {
            const PivotSettings& s = *cfg.pivot;
            validate(s.spec);
            j["spec"] = {{"beams", s.spec.n_beams},
                         {"beam_length_m", s.spec.beam_length},
                         {"beam_width_m", s.spec.beam_width},
                         {"beam_thickness_m", s.spec.beam_thickness},
                         {"elastic_modulus_Pa", s.spec.elastic_modulus},
                         {"shear_modulus_Pa", s.spec.shear_modulus},
                         {"stress_budget_Pa", s.spec.stress_budget},
                         {"topology", to_string(s.spec.topology)}};
            j["load"] = {{"max_angle_rad", s.max_angle},
                         {"k_t_Nm_per_rad", s.k_t},
                         {"torque_Nm", s.k_t * s.max_angle}};
            const double stiffness = pivot_stiffness(s.spec);
            const StressCheck stress = pivot_stress_check(s.spec, s.max_angle, s.k_t);
            j["stiffness_Nm_per_rad"] = stiffness;
            j["stress"] = {{"peak_Pa", stress.peak_stress},
                           {"within_budget", stress.within_budget}};
            ordered_json alts;
            for (const PivotTopology t : {PivotTopology::parallel_bending,
                                          PivotTopology::serial_torsion,
                                          PivotTopology::parallel_torsion}) {
                PivotSpec alt = s.spec;
                alt.topology = t;
                const StressCheck sc = pivot_stress_check(alt, s.max_angle, s.k_t);
                alts[to_string(t)] = {{"stiffness_Nm_per_rad", pivot_stiffness(alt)},
                                      {"peak_stress_Pa", sc.peak_stress},
                                      {"within_budget", sc.within_budget}};
            }
            j["topologies"] = alts;
            break;
        }
    }
    out.write(summary_name, summary_text(j));
    return result;
}

}  // namespace flapsim
