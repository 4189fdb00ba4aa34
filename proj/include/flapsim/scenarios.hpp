#pragma once

#include <optional>
#include <string>
#include <vector>

namespace flapsim {

/// A named, ready-to-run configuration baked into the binary.
struct Scenario {
    std::string name;
    std::string description;
    std::string config_text;
};

const std::vector<Scenario>& builtin_scenarios();

/// Config text for `name`, or nullopt when no such scenario exists.
std::optional<std::string> find_scenario(const std::string& name);

}  // namespace flapsim
