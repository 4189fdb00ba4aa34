#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>

#include "CLI11.hpp"

#include "flapsim/config.hpp"
#include "flapsim/runner.hpp"
#include "flapsim/scenarios.hpp"

namespace {

struct CommandOptions {
    std::string config;
    std::string output_dir = ".";
    bool dump = false;
};

// A config argument is a built-in scenario name first, a file path second.
std::pair<std::string, std::string> load_config_text(const std::string& arg) {
    if (const auto builtin = flapsim::find_scenario(arg)) return {*builtin, arg};
    std::ifstream in(arg);
    if (!in) {
        throw flapsim::ValidationError(
            {"'" + arg + "' is neither a built-in scenario nor a readable config file"});
    }
    std::ostringstream text;
    text << in.rdbuf();
    return {text.str(), std::filesystem::path(arg).stem().string()};
}

int run_command(flapsim::RunMode expected, const CommandOptions& opt) {
    const auto [text, stem] = load_config_text(opt.config);
    const flapsim::ScenarioConfig cfg = flapsim::parse_config(text, opt.config);
    if (cfg.mode != expected) {
        throw flapsim::ValidationError({"config sets mode = " + to_string(cfg.mode) +
                                        " but it was given to the " + to_string(expected) +
                                        " command"});
    }
    if (opt.dump) {
        std::cout << flapsim::dump_config(cfg);
        return 0;
    }
    const flapsim::RunResult result = flapsim::run_scenario(cfg, opt.output_dir, stem);
    for (const std::string& path : result.files_written) {
        std::cout << "wrote " << path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flapsim: design tools for milligram flapping-wing transmissions"};
    app.require_subcommand(1);
    bool seedless = false;
    app.add_flag("--seedless", seedless,
                 "reserved: runs are deterministic by construction and take no seed");

    CommandOptions opt;
    const std::pair<const char*, flapsim::RunMode> commands[] = {
        {"simulate", flapsim::RunMode::simulate},
        {"sweep", flapsim::RunMode::sweep},
        {"design", flapsim::RunMode::design},
        {"pivot", flapsim::RunMode::pivot},
    };
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, mode] : commands) {
        CLI::App* sub = app.add_subcommand(
            name, std::string("run a ") + name + " config (built-in scenario name or file path)");
        sub->add_option("config", opt.config, "built-in scenario name or config file")
            ->required();
        sub->add_option("--output-dir", opt.output_dir, "directory for output files");
        sub->add_flag("--dump-config", opt.dump,
                      "print the canonical config without running it");
        subs[name] = sub;
    }
    CLI::App* list = app.add_subcommand("list-scenarios", "list the built-in scenarios");

    CLI11_PARSE(app, argc, argv);

    if (seedless) {
        std::cerr << "error: --seedless is reserved; every run is already deterministic and no "
                     "seed exists to omit\n";
        return 1;
    }
    try {
        if (list->parsed()) {
            for (const flapsim::Scenario& s : flapsim::builtin_scenarios()) {
                std::printf("%-22s %s\n", s.name.c_str(), s.description.c_str());
            }
            return 0;
        }
        for (const auto& [name, mode] : commands) {
            if (subs[name]->parsed()) return run_command(mode, opt);
        }
        std::cerr << app.help();
        return 1;
    } catch (const flapsim::BlowupError& e) {
        std::cerr << "numerical blow-up: " << e.what() << "\n";
        return 2;
    } catch (const flapsim::ValidationError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
