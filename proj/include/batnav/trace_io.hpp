#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "batnav/benchmarks.hpp"
#include "batnav/config.hpp"
#include "batnav/planner.hpp"

namespace batnav {

// Trace CSV: header row, then one row per cycle with columns
//   cycle,time_s,x_m,y_m,mode,sensory_vector,escape_bearing_deg,obs1_x_m,obs1_y_m,...
// Doubles use shortest round-trip formatting, '.' decimal separator.
std::string trace_to_csv(const MissionTrace& trace);

std::vector<CycleRecord> parse_trace_csv(std::string_view csv);

// Recomputes the summary a trace's records imply (wall_time_s is left zero).
MissionSummary summarize_records(const std::vector<CycleRecord>& records,
                                 const EnvironmentSpec& environment,
                                 const PlannerConfig& config);

// Static plot: workspace, start/goal, path polyline, obstacle trajectories,
// and sensing-radius circles at a few snapshots.
std::string trace_to_svg(const MissionTrace& trace, const EnvironmentSpec& environment,
                         const PlannerConfig& config);

struct FitnessStats {
    double minimum = 0.0;
    double maximum = 0.0;
    double standard_deviation = 0.0;
    double mean = 0.0;
};

FitnessStats fitness_stats(const std::vector<RunSummary>& runs);

// Benchmark comparison table (BA row then MFBA row per function).
std::string bench_to_csv(const std::vector<TrialStatistics>& rows);
std::string bench_to_text(const std::vector<TrialStatistics>& rows);

// Per-run rows followed by minimum/maximum/standard_deviation/mean rows.
std::string plan_summary_to_csv(const BestOfRuns& result);
std::string plan_summary_to_text(const BestOfRuns& result, const PlannerConfig& config);

// Side-by-side fitness statistics, Standard BA vs MFBA.
std::string compare_to_csv(const BestOfRuns& ba, const BestOfRuns& mfba);
std::string compare_to_text(const BestOfRuns& ba, const BestOfRuns& mfba);

void write_file(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

}  // namespace batnav
