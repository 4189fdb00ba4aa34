#include "flapsim/types.hpp"

#include <cmath>
#include <sstream>

namespace flapsim {

std::string ValidationError::join(const std::vector<std::string>& v) {
    std::ostringstream os;
    os << "invalid parameters (" << v.size() << " violation" << (v.size() == 1 ? "" : "s") << "):";
    for (const auto& s : v) os << "\n  - " << s;
    return os.str();
}

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

BlowupError::BlowupError(double t)
    : std::runtime_error("state became non-finite at t = " + std::to_string(t) + " s"), t_(t) {}

std::string to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::stroke: return "stroke";
        case ModelKind::pitch: return "pitch";
        case ModelKind::synthetic: return "synthetic";
    }
    return "unknown";
}

bool SimState::finite() const {
    return std::isfinite(t) && std::isfinite(angle) && std::isfinite(rate);
}

Trajectory::Trajectory(ModelKind label, std::vector<SimState> samples)
    : label_(label), samples_(std::move(samples)), dt_(0.0) {
    std::vector<std::string> violations;
    if (samples_.size() < 2) {
        violations.push_back("trajectory needs at least 2 samples, got " +
                             std::to_string(samples_.size()));
        throw ValidationError(std::move(violations));
    }
    dt_ = samples_[1].t - samples_[0].t;
    if (!(dt_ > 0.0)) {
        violations.push_back("timestamps must be strictly increasing (dt = " +
                             std::to_string(dt_) + " at sample 1)");
    }
    for (std::size_t i = 1; i + 1 < samples_.size() && violations.empty(); ++i) {
        const double step = samples_[i + 1].t - samples_[i].t;
        if (!(step > 0.0)) {
            violations.push_back("timestamps must be strictly increasing (sample " +
                                 std::to_string(i + 1) + ")");
        } else if (std::abs(step - dt_) > 1e-9 * dt_) {
            violations.push_back("sampling must be uniform to 1e-9 relative: step at sample " +
                                 std::to_string(i + 1) + " is " + std::to_string(step) +
                                 " vs " + std::to_string(dt_));
        }
    }
    if (!violations.empty()) throw ValidationError(std::move(violations));
}

}  // namespace flapsim
