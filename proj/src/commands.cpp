#include "batnav/commands.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>

#include "batnav/benchmarks.hpp"
#include "batnav/trace_io.hpp"

namespace batnav {

namespace {

std::string run_file_name(std::size_t run_index) {
    std::ostringstream os;
    os << "trace_run" << std::setw(2) << std::setfill('0') << (run_index + 1) << ".csv";
    return os.str();
}

BestOfRuns run_plan_workload(const SimulationConfig& config, BetaSchedule algorithm,
                             int run_count, std::uint64_t base_seed,
                             const std::filesystem::path& out_dir) {
    PlannerConfig planner = config.planner;
    planner.algorithm = algorithm;
    BestOfRuns result = best_of_runs(config.environment, planner, run_count, base_seed);

    for (std::size_t i = 0; i < result.traces.size(); ++i) {
        write_file(out_dir / run_file_name(i), trace_to_csv(result.traces[i]));
    }
    const MissionTrace& plotted =
        result.best_index ? result.traces[*result.best_index] : result.traces.front();
    write_file(out_dir / "path.svg", trace_to_svg(plotted, config.environment, planner));
    write_file(out_dir / "summary.csv", plan_summary_to_csv(result));
    write_file(out_dir / "summary.txt", plan_summary_to_text(result, planner));
    return result;
}

}  // namespace

SimulationConfig resolve_config(const RunConfig& run) {
    SimulationConfig config =
        run.config_path.empty() ? parse_config("") : load_config(run.config_path);
    if (!run.preset.empty()) {
        config.environment = preset_environment(run.preset);
    }
    if (!run.algorithm.empty() && run.algorithm != "both") {
        config.planner.algorithm = schedule_from_name(run.algorithm);
        config.planner.optimizer.schedule = config.planner.algorithm;
    }
    config.validate();
    return config;
}

int cmd_bench(const RunConfig& run) {
    if (!run.algorithm.empty() && run.algorithm != "both") {
        throw ConfigError("bench always compares both algorithms; drop --algo or pass both");
    }
    SimulationConfig config = resolve_config(run);
    const int run_count = run.run_count > 0 ? run.run_count : 15;

    std::vector<BenchmarkId> selection;
    if (run.functions.empty()) {
        selection = all_benchmarks();
    } else {
        for (const std::string& name : run.functions) {
            selection.push_back(benchmark_from_name(name));
        }
    }
    if (selection.empty()) throw ConfigError("empty function selection");

    std::vector<TrialStatistics> rows;
    rows.reserve(selection.size() * 2);
    for (BenchmarkId id : selection) {
        BenchmarkFunction function = make_benchmark(id);
        TrialStatistics ba = run_trials(function, BetaSchedule::StandardBeta,
                                        config.planner.optimizer, run_count, run.base_seed);
        TrialStatistics mfba = run_trials(function, BetaSchedule::ModifiedFrequency,
                                          config.planner.optimizer, run_count, run.base_seed);
        mfba.significance_mark = compare_means(ba, mfba);
        rows.push_back(std::move(ba));
        rows.push_back(std::move(mfba));
    }

    write_file(run.output_dir / "bench.csv", bench_to_csv(rows));
    const std::string table = bench_to_text(rows);
    write_file(run.output_dir / "bench.txt", table);
    std::cout << table;
    return 0;
}

int cmd_plan(const RunConfig& run) {
    if (run.algorithm == "both") {
        throw ConfigError("plan runs a single algorithm; use the compare command for both");
    }
    SimulationConfig config = resolve_config(run);
    const int run_count = run.run_count > 0 ? run.run_count : 10;

    BestOfRuns result = run_plan_workload(config, config.planner.algorithm, run_count,
                                          run.base_seed, run.output_dir);
    std::cout << plan_summary_to_text(result, config.planner);
    return 0;
}

int cmd_compare(const RunConfig& run) {
    if (!run.algorithm.empty() && run.algorithm != "both") {
        throw ConfigError("compare always runs both algorithms; drop --algo or pass both");
    }
    SimulationConfig config = resolve_config(run);
    const int run_count = run.run_count > 0 ? run.run_count : 10;

    BestOfRuns ba = run_plan_workload(config, BetaSchedule::StandardBeta, run_count,
                                      run.base_seed, run.output_dir / "ba");
    BestOfRuns mfba = run_plan_workload(config, BetaSchedule::ModifiedFrequency, run_count,
                                        run.base_seed, run.output_dir / "mfba");

    write_file(run.output_dir / "compare.csv", compare_to_csv(ba, mfba));
    const std::string table = compare_to_text(ba, mfba);
    write_file(run.output_dir / "compare.txt", table);
    std::cout << table;
    return 0;
}

}  // namespace batnav
