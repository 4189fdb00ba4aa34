#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace flapsim {

/// Invalid parameters or configuration. Carries the complete list of
/// violations, not just the first, so batch callers get full diagnostics.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> violations);

    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v);
    std::vector<std::string> violations_;
};

/// Integration produced a non-finite state. `time()` is the first time at
/// which the state stopped being finite.
class BlowupError : public std::runtime_error {
public:
    explicit BlowupError(double t);

    double time() const noexcept { return t_; }

private:
    double t_;
};

/// Which model produced a trajectory. `synthetic` marks hand-built signals
/// (tests, analysis inputs) that belong to neither model.
enum class ModelKind { stroke, pitch, synthetic };

std::string to_string(ModelKind kind);

/// Instantaneous state of a single-angle model.
struct SimState {
    double t = 0.0;      ///< time [s]
    double angle = 0.0;  ///< stroke or pitch angle [rad]
    double rate = 0.0;   ///< angular velocity [rad/s]

    bool finite() const;
};

/// Time derivative of a SimState, as returned by a model right-hand side.
struct Derivative {
    double d_angle = 0.0;  ///< [rad/s]
    double d_rate = 0.0;   ///< [rad/s^2]
};

/// Uniformly sampled solution of one model run.
///
/// Construction validates the sampling: at least two samples, timestamps
/// strictly increasing and uniform to within 1 part in 1e9 of the step.
class Trajectory {
public:
    Trajectory(ModelKind label, std::vector<SimState> samples);

    ModelKind label() const noexcept { return label_; }
    std::size_t size() const noexcept { return samples_.size(); }
    const SimState& operator[](std::size_t i) const noexcept { return samples_[i]; }
    const std::vector<SimState>& samples() const noexcept { return samples_; }

    double t_start() const noexcept { return samples_.front().t; }
    double t_end() const noexcept { return samples_.back().t; }
    /// Sampling interval [s], taken from the first pair and validated uniform.
    double dt() const noexcept { return dt_; }

private:
    ModelKind label_;
    std::vector<SimState> samples_;
    double dt_;
};

}  // namespace flapsim
