#pragma once

#include <filesystem>
#include <string>

#include "batnav/environment.hpp"
#include "batnav/planner.hpp"

namespace batnav {

// Everything a simulation run needs. The optimizer settings live inside
// planner.optimizer.
struct SimulationConfig {
    PlannerConfig planner;
    EnvironmentSpec environment;

    void validate() const;

    friend bool operator==(const SimulationConfig&, const SimulationConfig&) = default;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses the line-oriented key=value format (see README for the grammar).
// Omitted keys keep their defaults; unknown sections or keys are errors.
SimulationConfig parse_config(std::string_view text);

SimulationConfig load_config(const std::filesystem::path& path);

// Emits every key explicitly; parse_config(serialize_config(c)) == c.
std::string serialize_config(const SimulationConfig& config);

BetaSchedule schedule_from_name(std::string_view name);  // "ba" / "mfba"
const char* schedule_key(BetaSchedule schedule);

}  // namespace batnav
