#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "batnav/environment.hpp"
#include "batnav/optimizer.hpp"
#include "batnav/perception.hpp"

namespace batnav {

struct PlannerConfig {
    BetaSchedule algorithm = BetaSchedule::ModifiedFrequency;
    OptimizerConfig optimizer;
    double step_length = 0.5;     // max per-cycle displacement, m
    int waypoint_iterations = 50; // optimizer iterations per waypoint decision
    int max_cycles = 500;
    double goal_tolerance = 0.1;  // m
    SensorConfig sensors;
    double robot_radius = 0.3;    // m

    void validate() const;

    friend bool operator==(const PlannerConfig&, const PlannerConfig&) = default;
};

enum class Mode { Navigate, Avoid };

const char* mode_name(Mode mode);
Mode mode_from_name(std::string_view name);

struct CycleRecord {
    int cycle = 0;
    double time_s = 0.0;
    Vec2 position;  // robot position after this cycle's move
    Mode mode = Mode::Navigate;
    SensoryVector sensory;
    std::optional<double> escape_bearing_deg;  // Avoid mode only; empty when blocked
    std::vector<Vec2> obstacle_positions;      // at time_s

    friend bool operator==(const CycleRecord&, const CycleRecord&) = default;
};

struct MissionSummary {
    double path_length = 0.0;
    int cycle_count = 0;
    double wall_time_s = 0.0;  // measured, not replayed; excluded from files
    bool collision = false;
    bool reached = false;
};

struct MissionTrace {
    std::uint64_t seed = 0;
    std::vector<CycleRecord> records;  // record 0 is the start state
    MissionSummary summary;
};

std::vector<Vec2> trace_waypoints(const MissionTrace& trace);

// Best next position inside the disc of radius step_length around the robot,
// chosen by the configured bat algorithm against the distance-to-goal fitness.
// Candidates rejected by `feasible` score zero fitness. Returns the goal
// directly once it is within one step.
Vec2 plan_next_waypoint(Vec2 robot_point, Vec2 goal, const PlannerConfig& config,
                        const Rect& workspace,
                        const std::function<bool(Vec2)>& feasible, RandomStream& rng);

// One step of step_length along the escape bearing, clamped to the workspace.
Vec2 avoidance_step(Vec2 robot_point, double escape_bearing_deg, double step_length,
                    const Rect& workspace);

// Full mission: per cycle the obstacles advance by the environment time step,
// the robot senses, then navigates (bat algorithm) or avoids (gap vector).
// Ends on goal reach, collision, or max_cycles.
MissionTrace run_mission(const EnvironmentSpec& environment, const PlannerConfig& config,
                         std::uint64_t seed);

struct RunSummary {
    std::uint64_t seed = 0;
    MissionSummary summary;
    double run_fitness = 0.0;  // 1 / (path_length + epsilon)
};

struct BestOfRuns {
    std::vector<MissionTrace> traces;            // one per run, in seed order
    std::vector<RunSummary> runs;
    std::optional<std::size_t> best_index;       // shortest collision-free reached run
};

BestOfRuns best_of_runs(const EnvironmentSpec& environment, const PlannerConfig& config,
                        int run_count, std::uint64_t base_seed);

}  // namespace batnav
