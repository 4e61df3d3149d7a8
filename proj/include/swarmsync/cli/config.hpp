#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "swarmsync/dynamics.hpp"

namespace swarmsync::cli {

/// Malformed or inconsistent configuration; the message names the field.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Run configuration exactly as written in the JSON file (degrees, named gain
/// sets kept by name) so it can be serialized back without loss.
struct RunConfig {
    std::string name;
    std::size_t n = 0;
    std::vector<double> theta0_deg;
    std::optional<std::vector<std::array<double, 2>>> positions0;
    std::variant<std::vector<double>, std::string> gains;
    double omega0 = 0.0;
    std::variant<std::string, std::vector<Edge>> topology = std::string("complete");
    double dt = 0.01;
    double t_max = 100.0;
    std::optional<double> u_max;
    bool saturate = false;
    std::optional<std::string> regime;  // "negative" | "two_agent_sum" | "cap"
    std::size_t record_stride = 1;
    std::uint64_t seed = 0;
    bool jitter = false;
    std::optional<double> target_deg;
    std::optional<double> eta;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::filesystem::path& path);
nlohmann::json to_json(const RunConfig& cfg);

GainVector resolve_gains(const RunConfig& cfg);
HeadingVector initial_headings(const RunConfig& cfg);
Topology resolve_topology(const RunConfig& cfg);
SimulationConfig to_simulation_config(const RunConfig& cfg);

}  // namespace swarmsync::cli
