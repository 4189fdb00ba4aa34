#include "flapsim/integrator.hpp"

#include <cmath>

namespace flapsim {

std::string to_string(Method m) {
    switch (m) {
        case Method::rk4: return "rk4";
        case Method::euler_oracle: return "euler-oracle";
    }
    return "unknown";
}

IntegrationConfig validate(const IntegrationConfig& cfg) {
    std::vector<std::string> v;
    if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) {
        v.push_back("dt must be strictly positive, got " + std::to_string(cfg.dt));
    }
    if (!(cfg.dt_out > 0.0) || !std::isfinite(cfg.dt_out)) {
        v.push_back("dt_out must be strictly positive, got " + std::to_string(cfg.dt_out));
    }
    if (!(cfg.t_end > 0.0) || !std::isfinite(cfg.t_end)) {
        v.push_back("t_end must be strictly positive, got " + std::to_string(cfg.t_end));
    }
    if (cfg.dt > 0.0 && cfg.dt_out > 0.0) {
        if (cfg.dt_out < cfg.dt) {
            v.push_back("dt_out must be at least dt");
        } else {
            const double ratio = cfg.dt_out / cfg.dt;
            if (std::abs(ratio - std::round(ratio)) > 1e-9 * ratio) {
                v.push_back("dt_out must be an integer multiple of dt, got ratio " +
                            std::to_string(ratio));
            }
        }
    }
    if (cfg.dt_out > 0.0 && cfg.t_end > 0.0 && cfg.t_end < cfg.dt_out) {
        v.push_back("t_end must cover at least one output interval");
    }
    if (!v.empty()) throw ValidationError(std::move(v));
    return cfg;
}

}  // namespace flapsim
