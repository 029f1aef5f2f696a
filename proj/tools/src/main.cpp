#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "dqjulia_cli/modes.hpp"
#include "dqjulia_cli/run_config.hpp"
#include "dqjulia_cli/sweep.hpp"

int main(int argc, char** argv) {
    using namespace dqjulia::cli;

    const std::vector<std::string> args(argv + 1, argv + argc);
    const ParseOutcome outcome = parse_command_line(args);

    if (outcome.kind == ParseOutcome::Kind::Help) {
        std::fputs(outcome.message.c_str(), stdout);
        return 0;
    }
    if (outcome.kind == ParseOutcome::Kind::Error) {
        std::fprintf(stderr, "dqjulia: error: %s\n", outcome.message.c_str());
        return 1;
    }

    const RunConfig& config = outcome.config;
    if (config.dump_config) {
        std::fputs(dump_config_document(config).c_str(), stdout);
        return 0;
    }

    try {
        switch (config.mode) {
        case RunMode::Render:
            run_render(config);
            break;
        case RunMode::Voxel:
            run_voxel(config);
            break;
        case RunMode::Sweep:
            run_sweep(config);
            break;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "dqjulia: error: %s\n", e.what());
        return 1;
    }
    return 0;
}
