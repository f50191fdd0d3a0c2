#include "batnav/planner.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

namespace batnav {

void PlannerConfig::validate() const {
    optimizer.validate();
    sensors.validate();
    if (!(step_length > 0.0)) throw std::invalid_argument("step_length must be > 0");
    if (waypoint_iterations < 1) throw std::invalid_argument("waypoint_iterations must be >= 1");
    if (max_cycles < 1) throw std::invalid_argument("max_cycles must be >= 1");
    if (!(goal_tolerance > 0.0)) throw std::invalid_argument("goal_tolerance must be > 0");
    if (!(robot_radius > 0.0)) throw std::invalid_argument("robot_radius must be > 0");
}

const char* mode_name(Mode mode) {
    return mode == Mode::Navigate ? "Navigate" : "Avoid";
}

Mode mode_from_name(std::string_view name) {
    if (name == "Navigate") return Mode::Navigate;
    if (name == "Avoid") return Mode::Avoid;
    throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

std::vector<Vec2> trace_waypoints(const MissionTrace& trace) {
    std::vector<Vec2> points;
    points.reserve(trace.records.size());
    for (const CycleRecord& record : trace.records) points.push_back(record.position);
    return points;
}

Vec2 plan_next_waypoint(Vec2 robot_point, Vec2 goal, const PlannerConfig& config,
                        const Rect& workspace,
                        const std::function<bool(Vec2)>& feasible, RandomStream& rng) {
    const double L = config.step_length;
    if (distance(robot_point, goal) <= L) return goal;

    // Reachable box: the step disc's bounding box intersected with the workspace.
    SearchSpace space{
        {std::max(workspace.min.x, robot_point.x - L), std::max(workspace.min.y, robot_point.y - L)},
        {std::min(workspace.max.x, robot_point.x + L), std::min(workspace.max.y, robot_point.y + L)}};

    SearchHooks hooks;
    hooks.init_accept = [&](const Vector& x) {
        return distance({x[0], x[1]}, robot_point) <= L;
    };
    hooks.project = [&](Vector& x) {
        Vec2 p{x[0], x[1]};
        double d = distance(p, robot_point);
        if (d > L) {
            p = robot_point + (L / d) * (p - robot_point);
            x[0] = p.x;
            x[1] = p.y;
        }
    };

    const double eps = config.optimizer.epsilon;
    Objective objective = [&](const Vector& x) {
        Vec2 candidate{x[0], x[1]};
        if (feasible && !feasible(candidate)) return 0.0;  // zero fitness, never best
        return -fitness(candidate, goal, eps);
    };

    OptimizerConfig optimizer = config.optimizer;
    optimizer.schedule = config.algorithm;
    optimizer.max_iterations = config.waypoint_iterations;
    optimizer.rng_seed = rng.next_u64();

    OptimizationResult result = optimize(objective, space, optimizer, &hooks);
    return {result.best_position[0], result.best_position[1]};
}

Vec2 avoidance_step(Vec2 robot_point, double escape_bearing_deg, double step_length,
                    const Rect& workspace) {
    return workspace.clamp(robot_point +
                           step_length * unit_from_bearing_deg(escape_bearing_deg));
}

MissionTrace run_mission(const EnvironmentSpec& environment, const PlannerConfig& config,
                         std::uint64_t seed) {
    environment.validate();
    config.validate();

    const auto started = std::chrono::steady_clock::now();
    RandomStream rng(seed);

    MissionTrace trace;
    trace.seed = seed;

    auto snapshot = [&](double t) {
        std::vector<Vec2> positions;
        positions.reserve(environment.obstacles.size());
        for (const Obstacle& obstacle : environment.obstacles) {
            positions.push_back(obstacle_position(obstacle, t));
        }
        return positions;
    };
    auto collides = [&](Vec2 p, double t) {
        for (const Obstacle& obstacle : environment.obstacles) {
            if (collision(p, obstacle, t, config.robot_radius)) return true;
        }
        return false;
    };

    Vec2 robot = environment.start;

    CycleRecord start_record;
    start_record.cycle = 0;
    start_record.time_s = 0.0;
    start_record.position = robot;
    start_record.mode = Mode::Navigate;
    start_record.sensory.bits.assign(config.sensors.sensor_count, 0);
    start_record.obstacle_positions = snapshot(0.0);
    trace.records.push_back(std::move(start_record));

    trace.summary.collision = collides(robot, 0.0);
    trace.summary.reached = distance(robot, environment.goal) <= config.goal_tolerance;

    for (int cycle = 1;
         cycle <= config.max_cycles && !trace.summary.reached && !trace.summary.collision;
         ++cycle) {
        const double t = cycle * environment.time_step;

        SensoryVector vs = build_sensory_vector(robot, environment.obstacles, t,
                                                config.sensors, config.robot_radius);

        CycleRecord record;
        record.cycle = cycle;
        record.time_s = t;
        record.sensory = vs;

        if (obstacle_detected(vs)) {
            record.mode = Mode::Avoid;
            auto bearing = select_gap(build_gap_vector(vs), robot, environment.goal);
            if (bearing) {
                robot = avoidance_step(robot, *bearing, config.step_length,
                                       environment.bounds);
                record.escape_bearing_deg = bearing;
            }
            // Blocked: hold position for one cycle and re-sense next cycle.
        } else {
            record.mode = Mode::Navigate;
            auto feasible = [&](Vec2 candidate) { return !collides(candidate, t); };
            robot = plan_next_waypoint(robot, environment.goal, config,
                                       environment.bounds, feasible, rng);
        }

        record.position = robot;
        record.obstacle_positions = snapshot(t);
        trace.records.push_back(std::move(record));

        if (collides(robot, t)) trace.summary.collision = true;
        if (distance(robot, environment.goal) <= config.goal_tolerance) {
            trace.summary.reached = true;
        }
    }

    trace.summary.cycle_count = static_cast<int>(trace.records.size()) - 1;
    if (trace.records.size() >= 2) {
        trace.summary.path_length = path_length(trace_waypoints(trace));
    }
    trace.summary.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return trace;
}

BestOfRuns best_of_runs(const EnvironmentSpec& environment, const PlannerConfig& config,
                        int run_count, std::uint64_t base_seed) {
    if (run_count < 1) throw std::invalid_argument("best_of_runs: run_count must be >= 1");

    BestOfRuns result;
    result.traces.reserve(run_count);
    result.runs.reserve(run_count);
    for (int run = 0; run < run_count; ++run) {
        const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(run);
        MissionTrace trace = run_mission(environment, config, seed);
        RunSummary summary;
        summary.seed = seed;
        summary.summary = trace.summary;
        summary.run_fitness =
            1.0 / (trace.summary.path_length + config.optimizer.epsilon);
        result.runs.push_back(summary);

        const bool usable = trace.summary.reached && !trace.summary.collision;
        if (usable && (!result.best_index ||
                       trace.summary.path_length <
                           result.traces[*result.best_index].summary.path_length)) {
            result.best_index = result.traces.size();
        }
        result.traces.push_back(std::move(trace));
    }
    return result;
}

}  // namespace batnav
