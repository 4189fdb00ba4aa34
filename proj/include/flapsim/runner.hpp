#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "flapsim/config.hpp"

namespace flapsim {

struct RunResult {
    nlohmann::ordered_json summary;
    std::vector<std::string> files_written;
};

/// Execute one parsed configuration and write its outputs into output_dir
/// (created if missing). `stem` names the files, <stem>_summary.json and so
/// on, unless the config's [output] section overrides them. Repeat runs of
/// the same config produce byte-identical files.
///
/// Throws ValidationError for parameter problems and BlowupError when the
/// integration diverges; a design search that merely finds no solution is a
/// reported result, not an error.
RunResult run_scenario(const ScenarioConfig& cfg, const std::string& output_dir,
                       const std::string& stem);

}  // namespace flapsim
