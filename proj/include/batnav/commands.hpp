#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "batnav/config.hpp"

namespace batnav {

struct RunConfig {
    std::string config_path;            // empty: built-in defaults
    std::string algorithm;              // "ba", "mfba", or "" = config value
    int run_count = 0;                  // 0 = command default (bench 15, plan 10)
    std::uint64_t base_seed = 1;
    std::string preset;                 // overrides the environment when set
    std::filesystem::path output_dir = "out";
    std::vector<std::string> functions; // bench selection; empty = all six
};

// Loads the config file (or defaults) and applies the CLI overrides.
SimulationConfig resolve_config(const RunConfig& run);

// Benchmark table for BA and MFBA over the selected functions.
// Writes bench.csv and bench.txt.
int cmd_bench(const RunConfig& run);

// Mission runs; writes trace_runNN.csv per run, path.svg, summary.csv,
// summary.txt.
int cmd_plan(const RunConfig& run);

// BA and MFBA on the same seeds; writes full plan outputs under ba/ and
// mfba/ plus compare.csv and compare.txt.
int cmd_compare(const RunConfig& run);

}  // namespace batnav
