#include "flapsim/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "flapsim/units.hpp"

namespace flapsim {

namespace {

using units::Dimension;

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) return false;
    }
    return !std::isdigit(static_cast<unsigned char>(s.front()));
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct RawValue {
    std::string text;
    int line = 0;
};

using SectionMap = std::map<std::string, RawValue>;

// key -> required dimension, per section. Doubles as the unknown-key schema.
const std::map<std::string, std::map<std::string, Dimension>>& schema() {
    using D = Dimension;
    static const std::map<std::string, std::map<std::string, Dimension>> s = {
        {"", {{"mode", D::dimensionless}, {"model", D::dimensionless}}},
        {"stroke",
         {{"m_r", D::mass}, {"tune_mass_to", D::frequency}, {"L", D::length},
          {"k_t", D::torque}, {"L_w", D::length}, {"z_max", D::length},
          {"drive", D::dimensionless}, {"f", D::frequency}, {"omega", D::angular_rate},
          {"damping", D::dimensionless}, {"b", D::damping}, {"peak_force", D::force},
          {"damping_scale", D::dimensionless}}},
        {"pitch",
         {{"m", D::mass}, {"l", D::length}, {"k", D::torque}, {"p", D::length},
          {"L_w", D::length}, {"A", D::angle}, {"f", D::frequency}, {"omega", D::angular_rate},
          {"aero_force", D::force}, {"b", D::damping}}},
        {"integration",
         {{"method", D::dimensionless}, {"steps_per_cycle", D::dimensionless},
          {"cycles", D::dimensionless}, {"output_every", D::dimensionless}}},
        {"analysis",
         {{"window_cycles", D::dimensionless}, {"settle_cycles", D::dimensionless},
          {"settle_tol", D::dimensionless}}},
        {"sweep", {{"freq_scale", D::dimensionless}, {"freqs", D::frequency}}},
        {"design",
         {{"task", D::dimensionless}, {"k_t", D::torque}, {"L", D::length},
          {"f_target", D::frequency}, {"verify", D::dimensionless}, {"z_max", D::length},
          {"m_r", D::mass}, {"L_w", D::length}, {"target_amplitude", D::angle},
          {"L_min", D::length}, {"L_max", D::length}, {"k_t_min", D::torque},
          {"k_t_max", D::torque}, {"tolerance", D::dimensionless},
          {"grid_points", D::dimensionless}}},
        {"pivot",
         {{"beams", D::dimensionless}, {"beam_length", D::length}, {"beam_width", D::length},
          {"beam_thickness", D::length}, {"elastic_modulus", D::pressure},
          {"shear_modulus", D::pressure}, {"stress_budget", D::pressure},
          {"topology", D::dimensionless}, {"max_angle", D::angle}, {"k_t", D::torque}}},
        {"output", {{"trajectory", D::dimensionless}, {"summary", D::dimensionless}}},
    };
    return s;
}

std::optional<double> parse_quantity(const std::string& text, Dimension dim, std::string& err) {
    const char* begin = text.c_str();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(begin, &end);
    if (end == begin) {
        err = "expected a number, got '" + text + "'";
        return std::nullopt;
    }
    if (!std::isfinite(v) || errno == ERANGE) {
        err = "value must be finite, got '" + text + "'";
        return std::nullopt;
    }
    const std::string unit = trim(std::string(end));
    const auto f = units::factor(dim, unit);
    if (!f) {
        const std::string si = units::si_name(dim);
        err = si.empty() ? "'" + unit + "' is not valid on a dimensionless value"
                         : "unit '" + unit + "' is not a valid " + si + " unit";
        return std::nullopt;
    }
    return v * *f;
}

// One section of the raw key-value soup, with problem reporting attached.
class Block {
public:
    Block(const std::map<std::string, SectionMap>& sections, std::string name,
          std::vector<std::string>& problems, const std::string& source)
        : name_(std::move(name)), problems_(problems), source_(source) {
        const auto it = sections.find(name_);
        kvs_ = it == sections.end() ? nullptr : &it->second;
    }

    bool present() const { return kvs_ != nullptr; }
    bool has(const std::string& key) const { return kvs_ && kvs_->count(key) > 0; }

    void problem(const std::string& msg) const {
        problems_.push_back(source_ + ": " + where() + msg);
    }

    void missing(const std::string& key) const {
        problem("missing required key '" + key + "'");
    }

    std::optional<std::string> word(const std::string& key) const {
        if (!has(key)) return std::nullopt;
        return kvs_->at(key).text;
    }

    std::optional<double> qty(const std::string& key, Dimension dim) const {
        if (!has(key)) return std::nullopt;
        std::string err;
        const auto v = parse_quantity(kvs_->at(key).text, dim, err);
        if (!v) problem("key '" + key + "': " + err);
        return v;
    }

    double require_qty(const std::string& key, Dimension dim) const {
        if (!has(key)) {
            missing(key);
            return std::numeric_limits<double>::quiet_NaN();
        }
        return qty(key, dim).value_or(std::numeric_limits<double>::quiet_NaN());
    }

    std::optional<std::vector<double>> qty_list(const std::string& key, Dimension dim) const {
        if (!has(key)) return std::nullopt;
        const std::string& text = kvs_->at(key).text;
        std::vector<double> out;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t comma = text.find(',', pos);
            const std::string item =
                trim(text.substr(pos, comma == std::string::npos ? comma : comma - pos));
            std::string err;
            const auto v = parse_quantity(item, dim, err);
            if (!v) {
                problem("key '" + key + "': " + err);
                return std::nullopt;
            }
            out.push_back(*v);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return out;
    }

    std::optional<long> integer(const std::string& key) const {
        if (!has(key)) return std::nullopt;
        const std::string& text = kvs_->at(key).text;
        char* end = nullptr;
        errno = 0;
        const long v = std::strtol(text.c_str(), &end, 10);
        if (end == text.c_str() || *end != '\0' || errno == ERANGE) {
            problem("key '" + key + "': expected an integer, got '" + text + "'");
            return std::nullopt;
        }
        return v;
    }

    std::optional<bool> flag(const std::string& key) const {
        const auto w = word(key);
        if (!w) return std::nullopt;
        if (*w == "on" || *w == "true" || *w == "yes") return true;
        if (*w == "off" || *w == "false" || *w == "no") return false;
        problem("key '" + key + "': expected on/off, got '" + *w + "'");
        return std::nullopt;
    }

    template <typename T>
    std::optional<T> choice(const std::string& key,
                            std::initializer_list<std::pair<const char*, T>> values) const {
        const auto w = word(key);
        if (!w) return std::nullopt;
        std::string expected;
        for (const auto& [name, value] : values) {
            if (*w == name) return value;
            expected += expected.empty() ? name : std::string(" | ") + name;
        }
        problem("key '" + key + "': expected " + expected + ", got '" + *w + "'");
        return std::nullopt;
    }

private:
    std::string where() const { return name_.empty() ? "" : "[" + name_ + "] "; }

    const SectionMap* kvs_ = nullptr;
    std::string name_;
    std::vector<std::string>& problems_;
    const std::string& source_;
};

StrokeSettings parse_stroke(const Block& b) {
    StrokeSettings s;
    s.m_r = b.qty("m_r", Dimension::mass);
    s.tune_mass_to = b.qty("tune_mass_to", Dimension::frequency);
    if (b.has("m_r") == b.has("tune_mass_to")) {
        b.problem("exactly one of 'm_r' and 'tune_mass_to' must be set");
    }
    s.L = b.require_qty("L", Dimension::length);
    s.k_t = b.require_qty("k_t", Dimension::torque);
    s.L_w = b.require_qty("L_w", Dimension::length);
    s.z_max = b.require_qty("z_max", Dimension::length);

    const int drive_keys = int(b.has("drive")) + int(b.has("f")) + int(b.has("omega"));
    if (drive_keys != 1) {
        b.problem("exactly one of 'drive = resonant', 'f' and 'omega' must be set");
    }
    if (b.has("drive")) {
        if (b.word("drive") != "resonant") {
            b.problem("key 'drive': the only keyword is 'resonant'; use 'f' or 'omega' to pin "
                      "the frequency");
        }
        s.drive = DriveSpec{true, 0.0};
    } else if (b.has("f")) {
        s.drive = DriveSpec{false, 2.0 * std::numbers::pi *
                                       b.qty("f", Dimension::frequency).value_or(0.0)};
    } else if (b.has("omega")) {
        s.drive = DriveSpec{false, b.qty("omega", Dimension::angular_rate).value_or(0.0)};
    }

    if (b.has("damping") == b.has("b")) {
        b.problem("exactly one of 'damping = auto' and 'b' must be set");
    }
    if (b.has("damping")) {
        if (b.word("damping") != "auto") {
            b.problem("key 'damping': the only keyword is 'auto'; use 'b' for an explicit value");
        }
        s.damping.automatic = true;
        s.damping.peak_force =
            b.qty("peak_force", Dimension::force).value_or(kDefaultPeakWingForce);
        s.damping.scale = b.qty("damping_scale", Dimension::dimensionless).value_or(1.0);
    } else {
        s.damping.automatic = false;
        s.damping.b = b.qty("b", Dimension::damping).value_or(0.0);
        if (b.has("peak_force") || b.has("damping_scale")) {
            b.problem("'peak_force' and 'damping_scale' only apply to damping = auto");
        }
    }
    return s;
}

PitchSettings parse_pitch(const Block& b) {
    PitchSettings s;
    s.m = b.require_qty("m", Dimension::mass);
    s.l = b.require_qty("l", Dimension::length);
    s.k = b.require_qty("k", Dimension::torque);
    s.p = b.require_qty("p", Dimension::length);
    s.L_w = b.require_qty("L_w", Dimension::length);
    s.A = b.require_qty("A", Dimension::angle);
    if (b.has("f") == b.has("omega")) {
        b.problem("exactly one of 'f' and 'omega' must be set");
    }
    if (b.has("f")) {
        s.omega = 2.0 * std::numbers::pi * b.qty("f", Dimension::frequency).value_or(0.0);
    } else {
        s.omega = b.qty("omega", Dimension::angular_rate).value_or(0.0);
    }
    if (b.has("aero_force") == b.has("b")) {
        b.problem("exactly one of 'aero_force' and 'b' must be set");
    }
    s.aero_force = b.qty("aero_force", Dimension::force);
    s.b = b.qty("b", Dimension::damping);
    return s;
}

IntegrationSettings parse_integration(const Block& b) {
    IntegrationSettings s;
    if (const auto m = b.choice<Method>(
            "method", {{"rk4", Method::rk4}, {"euler-oracle", Method::euler_oracle}})) {
        s.method = *m;
    }
    auto positive_int = [&](const char* key, int fallback) {
        const auto v = b.integer(key);
        if (!v) return fallback;
        if (*v < 1) {
            b.problem(std::string("key '") + key + "' must be at least 1");
            return fallback;
        }
        return static_cast<int>(*v);
    };
    s.steps_per_cycle = positive_int("steps_per_cycle", s.steps_per_cycle);
    s.cycles = positive_int("cycles", s.cycles);
    s.output_every = positive_int("output_every", s.output_every);
    return s;
}

AnalysisSettings parse_analysis(const Block& b) {
    AnalysisSettings s;
    auto positive_int = [&](const char* key, int fallback) {
        const auto v = b.integer(key);
        if (!v) return fallback;
        if (*v < 1) {
            b.problem(std::string("key '") + key + "' must be at least 1");
            return fallback;
        }
        return static_cast<int>(*v);
    };
    s.window_cycles = positive_int("window_cycles", s.window_cycles);
    s.settle_cycles = positive_int("settle_cycles", s.settle_cycles);
    if (const auto tol = b.qty("settle_tol", Dimension::dimensionless)) s.settle_tol = *tol;
    return s;
}

SweepSettings parse_sweep(const Block& b) {
    SweepSettings s;
    if (b.has("freq_scale") == b.has("freqs")) {
        b.problem("exactly one of 'freq_scale' and 'freqs' must be set");
    }
    if (const auto v = b.qty_list("freq_scale", Dimension::dimensionless)) s.freq_scale = *v;
    if (const auto v = b.qty_list("freqs", Dimension::frequency)) s.freqs_hz = *v;
    return s;
}

DesignSettings parse_design(const Block& b) {
    DesignSettings d;
    const auto task = b.choice<DesignTask>(
        "task", {{"resonant-mass", DesignTask::resonant_mass},
                 {"stroke-amplitude", DesignTask::stroke_amplitude}});
    if (!b.has("task")) b.missing("task");
    d.task = task.value_or(DesignTask::resonant_mass);
    if (!task) return d;

    auto forbid = [&](std::initializer_list<const char*> keys) {
        for (const char* key : keys) {
            if (b.has(key)) {
                b.problem("key '" + std::string(key) + "' is not used by task " +
                          to_string(d.task));
            }
        }
    };
    if (d.task == DesignTask::resonant_mass) {
        d.k_t = b.require_qty("k_t", Dimension::torque);
        d.L = b.require_qty("L", Dimension::length);
        d.f_target = b.require_qty("f_target", Dimension::frequency);
        d.verify = b.flag("verify").value_or(false);
        if (d.verify) {
            d.z_max = b.require_qty("z_max", Dimension::length);
            d.L_w = b.require_qty("L_w", Dimension::length);
        } else if (b.has("z_max") || b.has("L_w")) {
            b.problem("'z_max' and 'L_w' only apply when verify = on");
        }
        forbid({"m_r", "target_amplitude", "L_min", "L_max", "k_t_min", "k_t_max", "tolerance",
                "grid_points"});
    } else {
        d.z_max = b.require_qty("z_max", Dimension::length);
        d.m_r = b.require_qty("m_r", Dimension::mass);
        d.L_w = b.require_qty("L_w", Dimension::length);
        d.target_amplitude = b.require_qty("target_amplitude", Dimension::angle);
        d.bounds.L_min = b.require_qty("L_min", Dimension::length);
        d.bounds.L_max = b.require_qty("L_max", Dimension::length);
        d.bounds.k_t_min = b.require_qty("k_t_min", Dimension::torque);
        d.bounds.k_t_max = b.require_qty("k_t_max", Dimension::torque);
        if (const auto tol = b.qty("tolerance", Dimension::dimensionless)) d.tolerance = *tol;
        if (const auto g = b.integer("grid_points")) d.grid_points = static_cast<int>(*g);
        forbid({"k_t", "L", "f_target", "verify"});
    }
    return d;
}

PivotSettings parse_pivot(const Block& b) {
    PivotSettings s;
    if (const auto n = b.integer("beams")) {
        s.spec.n_beams = static_cast<int>(*n);
    } else if (!b.has("beams")) {
        b.missing("beams");
    }
    s.spec.beam_length = b.require_qty("beam_length", Dimension::length);
    s.spec.beam_width = b.require_qty("beam_width", Dimension::length);
    s.spec.beam_thickness = b.require_qty("beam_thickness", Dimension::length);
    if (const auto v = b.qty("elastic_modulus", Dimension::pressure)) s.spec.elastic_modulus = *v;
    if (const auto v = b.qty("shear_modulus", Dimension::pressure)) s.spec.shear_modulus = *v;
    if (const auto v = b.qty("stress_budget", Dimension::pressure)) s.spec.stress_budget = *v;
    const auto topo = b.choice<PivotTopology>(
        "topology", {{"parallel-bending", PivotTopology::parallel_bending},
                     {"serial-torsion", PivotTopology::serial_torsion},
                     {"parallel-torsion", PivotTopology::parallel_torsion}});
    if (!b.has("topology")) b.missing("topology");
    s.spec.topology = topo.value_or(PivotTopology::serial_torsion);
    s.max_angle = b.require_qty("max_angle", Dimension::angle);
    s.k_t = b.require_qty("k_t", Dimension::torque);
    return s;
}

}  // namespace

std::string to_string(RunMode m) {
    switch (m) {
        case RunMode::simulate: return "simulate";
        case RunMode::sweep: return "sweep";
        case RunMode::design: return "design";
        case RunMode::pivot: return "pivot";
    }
    return "unknown";
}

std::string to_string(DesignTask t) {
    switch (t) {
        case DesignTask::resonant_mass: return "resonant-mass";
        case DesignTask::stroke_amplitude: return "stroke-amplitude";
    }
    return "unknown";
}

ScenarioConfig parse_config(const std::string& text, const std::string& source_name) {
    std::vector<std::string> problems;
    std::map<std::string, SectionMap> sections;
    std::set<std::string> seen_sections{""};

    // Pass 1: lines into (section, key) -> raw value.
    std::istringstream in(text);
    std::string line;
    std::string current;
    int line_no = 0;
    auto syntax_problem = [&](int ln, const std::string& msg) {
        problems.push_back(source_name + ":" + std::to_string(ln) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                syntax_problem(line_no, "unterminated section header '" + line + "'");
                continue;
            }
            const std::string name = trim(line.substr(1, line.size() - 2));
            if (!is_identifier(name)) {
                syntax_problem(line_no, "bad section name '" + name + "'");
                continue;
            }
            if (!seen_sections.insert(name).second) {
                syntax_problem(line_no, "duplicate section [" + name + "]");
            }
            current = name;
            sections[current];  // an empty section still counts as declared
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            syntax_problem(line_no, "expected 'key = value', got '" + line + "'");
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!is_identifier(key)) {
            syntax_problem(line_no, "bad key name '" + key + "'");
            continue;
        }
        if (value.empty()) {
            syntax_problem(line_no, "key '" + key + "' has an empty value");
            continue;
        }
        if (!sections[current].emplace(key, RawValue{value, line_no}).second) {
            syntax_problem(line_no, "duplicate key '" + key + "'" +
                                        (current.empty() ? "" : " in [" + current + "]"));
        }
    }

    // Pass 2: schema. Unknown sections and keys are hard errors.
    for (const auto& [name, kvs] : sections) {
        const auto it = schema().find(name);
        if (it == schema().end()) {
            problems.push_back(source_name + ": unknown section [" + name + "]");
            continue;
        }
        for (const auto& [key, rv] : kvs) {
            if (it->second.count(key) == 0) {
                problems.push_back(source_name + ":" + std::to_string(rv.line) +
                                   ": unknown key '" + key + "'" +
                                   (name.empty() ? "" : " in [" + name + "]"));
            }
        }
    }

    // Pass 3: extraction, driven by mode.
    ScenarioConfig cfg;
    const Block top(sections, "", problems, source_name);
    const auto mode = top.choice<RunMode>("mode", {{"simulate", RunMode::simulate},
                                                   {"sweep", RunMode::sweep},
                                                   {"design", RunMode::design},
                                                   {"pivot", RunMode::pivot}});
    if (!top.has("mode")) top.missing("mode");
    cfg.mode = mode.value_or(RunMode::simulate);
    cfg.model = top.choice<ModelKind>("model",
                                      {{"stroke", ModelKind::stroke}, {"pitch", ModelKind::pitch}});

    const Block stroke_b(sections, "stroke", problems, source_name);
    const Block pitch_b(sections, "pitch", problems, source_name);
    const Block integration_b(sections, "integration", problems, source_name);
    const Block analysis_b(sections, "analysis", problems, source_name);
    const Block sweep_b(sections, "sweep", problems, source_name);
    const Block design_b(sections, "design", problems, source_name);
    const Block pivot_b(sections, "pivot", problems, source_name);
    const Block output_b(sections, "output", problems, source_name);

    std::set<std::string> allowed{"", "output"};
    if (mode) {
        switch (*mode) {
            case RunMode::simulate: {
                allowed.insert({"integration", "analysis"});
                if (!cfg.model) {
                    top.problem("mode simulate requires model = stroke | pitch");
                } else if (*cfg.model == ModelKind::stroke) {
                    allowed.insert("stroke");
                    if (!stroke_b.present()) {
                        top.problem("model = stroke requires a [stroke] section");
                    } else {
                        cfg.stroke = parse_stroke(stroke_b);
                    }
                } else {
                    allowed.insert("pitch");
                    if (!pitch_b.present()) {
                        top.problem("model = pitch requires a [pitch] section");
                    } else {
                        cfg.pitch = parse_pitch(pitch_b);
                    }
                }
                break;
            }
            case RunMode::sweep: {
                allowed.insert({"stroke", "sweep", "integration", "analysis"});
                if (cfg.model && *cfg.model != ModelKind::stroke) {
                    top.problem("mode sweep supports model = stroke only");
                }
                cfg.model = ModelKind::stroke;
                if (!stroke_b.present()) {
                    top.problem("mode sweep requires a [stroke] section");
                } else {
                    cfg.stroke = parse_stroke(stroke_b);
                }
                if (!sweep_b.present()) {
                    top.problem("mode sweep requires a [sweep] section");
                } else {
                    cfg.sweep = parse_sweep(sweep_b);
                }
                break;
            }
            case RunMode::design: {
                allowed.insert({"design", "integration", "analysis"});
                if (cfg.model) top.problem("mode design does not take a model");
                cfg.model.reset();
                if (!design_b.present()) {
                    top.problem("mode design requires a [design] section");
                } else {
                    cfg.design = parse_design(design_b);
                }
                break;
            }
            case RunMode::pivot: {
                allowed.insert("pivot");
                if (cfg.model) top.problem("mode pivot does not take a model");
                cfg.model.reset();
                if (!pivot_b.present()) {
                    top.problem("mode pivot requires a [pivot] section");
                } else {
                    cfg.pivot = parse_pivot(pivot_b);
                }
                break;
            }
        }
        for (const auto& [name, kvs] : sections) {
            if (schema().count(name) > 0 && allowed.count(name) == 0) {
                problems.push_back(source_name + ": section [" + name + "] is not used by mode " +
                                   to_string(*mode));
            }
        }
    }
    if (integration_b.present()) cfg.integration = parse_integration(integration_b);
    if (analysis_b.present()) cfg.analysis = parse_analysis(analysis_b);
    if (output_b.present()) {
        cfg.output.trajectory = output_b.word("trajectory").value_or("");
        cfg.output.summary = output_b.word("summary").value_or("");
    }

    if (!problems.empty()) throw ValidationError(std::move(problems));
    return cfg;
}

std::string dump_config(const ScenarioConfig& cfg) {
    std::ostringstream os;
    os << "mode = " << to_string(cfg.mode) << "\n";
    if (cfg.model) os << "model = " << to_string(*cfg.model) << "\n";

    if (cfg.stroke) {
        const StrokeSettings& s = *cfg.stroke;
        os << "\n[stroke]\n";
        if (s.m_r) os << "m_r = " << fmt(*s.m_r) << "\n";
        if (s.tune_mass_to) os << "tune_mass_to = " << fmt(*s.tune_mass_to) << "\n";
        os << "L = " << fmt(s.L) << "\n";
        os << "k_t = " << fmt(s.k_t) << "\n";
        os << "L_w = " << fmt(s.L_w) << "\n";
        os << "z_max = " << fmt(s.z_max) << "\n";
        if (s.drive.resonant) {
            os << "drive = resonant\n";
        } else {
            os << "omega = " << fmt(s.drive.omega) << "\n";
        }
        if (s.damping.automatic) {
            os << "damping = auto\n";
            os << "peak_force = " << fmt(s.damping.peak_force) << "\n";
            os << "damping_scale = " << fmt(s.damping.scale) << "\n";
        } else {
            os << "b = " << fmt(s.damping.b) << "\n";
        }
    }
    if (cfg.pitch) {
        const PitchSettings& s = *cfg.pitch;
        os << "\n[pitch]\n";
        os << "m = " << fmt(s.m) << "\n";
        os << "l = " << fmt(s.l) << "\n";
        os << "k = " << fmt(s.k) << "\n";
        os << "p = " << fmt(s.p) << "\n";
        os << "L_w = " << fmt(s.L_w) << "\n";
        os << "A = " << fmt(s.A) << "\n";
        os << "omega = " << fmt(s.omega) << "\n";
        if (s.aero_force) os << "aero_force = " << fmt(*s.aero_force) << "\n";
        if (s.b) os << "b = " << fmt(*s.b) << "\n";
    }
    if (cfg.sweep) {
        os << "\n[sweep]\n";
        auto join = [](const std::vector<double>& v) {
            std::string out;
            for (double x : v) out += (out.empty() ? "" : ", ") + fmt(x);
            return out;
        };
        if (!cfg.sweep->freq_scale.empty()) {
            os << "freq_scale = " << join(cfg.sweep->freq_scale) << "\n";
        }
        if (!cfg.sweep->freqs_hz.empty()) os << "freqs = " << join(cfg.sweep->freqs_hz) << "\n";
    }
    if (cfg.design) {
        const DesignSettings& d = *cfg.design;
        os << "\n[design]\n";
        os << "task = " << to_string(d.task) << "\n";
        if (d.task == DesignTask::resonant_mass) {
            os << "k_t = " << fmt(d.k_t) << "\n";
            os << "L = " << fmt(d.L) << "\n";
            os << "f_target = " << fmt(d.f_target) << "\n";
            os << "verify = " << (d.verify ? "on" : "off") << "\n";
            if (d.verify) {
                os << "z_max = " << fmt(d.z_max) << "\n";
                os << "L_w = " << fmt(d.L_w) << "\n";
            }
        } else {
            os << "z_max = " << fmt(d.z_max) << "\n";
            os << "m_r = " << fmt(d.m_r) << "\n";
            os << "L_w = " << fmt(d.L_w) << "\n";
            os << "target_amplitude = " << fmt(d.target_amplitude) << "\n";
            os << "L_min = " << fmt(d.bounds.L_min) << "\n";
            os << "L_max = " << fmt(d.bounds.L_max) << "\n";
            os << "k_t_min = " << fmt(d.bounds.k_t_min) << "\n";
            os << "k_t_max = " << fmt(d.bounds.k_t_max) << "\n";
            os << "tolerance = " << fmt(d.tolerance) << "\n";
            os << "grid_points = " << d.grid_points << "\n";
        }
    }
    if (cfg.pivot) {
        const PivotSettings& s = *cfg.pivot;
        os << "\n[pivot]\n";
        os << "beams = " << s.spec.n_beams << "\n";
        os << "beam_length = " << fmt(s.spec.beam_length) << "\n";
        os << "beam_width = " << fmt(s.spec.beam_width) << "\n";
        os << "beam_thickness = " << fmt(s.spec.beam_thickness) << "\n";
        os << "elastic_modulus = " << fmt(s.spec.elastic_modulus) << "\n";
        os << "shear_modulus = " << fmt(s.spec.shear_modulus) << "\n";
        os << "stress_budget = " << fmt(s.spec.stress_budget) << "\n";
        os << "topology = " << to_string(s.spec.topology) << "\n";
        os << "max_angle = " << fmt(s.max_angle) << "\n";
        os << "k_t = " << fmt(s.k_t) << "\n";
    }
    if (cfg.mode == RunMode::simulate || cfg.mode == RunMode::sweep ||
        cfg.mode == RunMode::design) {
        os << "\n[integration]\n";
        os << "method = " << to_string(cfg.integration.method) << "\n";
        os << "steps_per_cycle = " << cfg.integration.steps_per_cycle << "\n";
        os << "cycles = " << cfg.integration.cycles << "\n";
        os << "output_every = " << cfg.integration.output_every << "\n";
        os << "\n[analysis]\n";
        os << "window_cycles = " << cfg.analysis.window_cycles << "\n";
        os << "settle_cycles = " << cfg.analysis.settle_cycles << "\n";
        os << "settle_tol = " << fmt(cfg.analysis.settle_tol) << "\n";
    }
    if (!cfg.output.trajectory.empty() || !cfg.output.summary.empty()) {
        os << "\n[output]\n";
        if (!cfg.output.trajectory.empty()) os << "trajectory = " << cfg.output.trajectory << "\n";
        if (!cfg.output.summary.empty()) os << "summary = " << cfg.output.summary << "\n";
    }
    return os.str();
}

StrokeParams resolve(const StrokeSettings& s) {
    StrokeParams p;
    p.m_r = s.m_r ? *s.m_r : solve_resonant_mass(s.k_t, s.L, s.tune_mass_to.value_or(0.0));
    p.L = s.L;
    p.k_t = s.k_t;
    p.L_w = s.L_w;
    p.z_max = s.z_max;
    p.omega = s.drive.resonant ? natural_frequency(p) : s.drive.omega;
    p.b = s.damping.automatic
              ? calibrate_damping(s.L_w, p.omega, s.z_max, s.damping.peak_force) * s.damping.scale
              : s.damping.b;
    return validate(p);
}

PitchParams resolve(const PitchSettings& s) {
    if (s.aero_force) {
        return validate(
            PitchParams::with_peak_aero_force(s.m, s.l, s.k, s.p, s.L_w, s.A, s.omega,
                                              *s.aero_force));
    }
    PitchParams p{s.m, s.l, s.k, s.p, s.L_w, s.b.value_or(0.0), s.A, s.omega};
    return validate(p);
}

IntegrationConfig integration_for(const IntegrationSettings& s, double drive_period) {
    if (!(drive_period > 0.0) || !std::isfinite(drive_period)) {
        throw ValidationError({"drive period must be strictly positive"});
    }
    const double dt = drive_period / s.steps_per_cycle;
    return validate(IntegrationConfig{dt, s.cycles * drive_period, s.output_every * dt, s.method});
}

}  // namespace flapsim
