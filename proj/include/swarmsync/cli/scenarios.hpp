#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "swarmsync/cli/config.hpp"

namespace swarmsync::cli {

/// One named simulation inside a built-in scenario.
struct ScenarioRun {
    std::string label;
    RunConfig config;
};

struct ScenarioSpec {
    std::string name;
    std::string description;
    std::vector<ScenarioRun> runs;
};

const std::vector<std::string>& scenario_names();

/// Throws ConfigError for unknown names.
ScenarioSpec builtin_scenario(const std::string& name);

/// Reference headings, positions and gain sets of the six-agent runs.
RunConfig six_agent_base();

}  // namespace swarmsync::cli
