// batnav: bat-algorithm optimization and dynamic path-planning simulator.

#include <iostream>

#include <CLI11.hpp>

#include "batnav/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Bat-algorithm swarm optimizer with a dynamic-environment path planner"};
    app.require_subcommand(1);

    batnav::RunConfig run;

    auto add_common = [&run](CLI::App* cmd) {
        cmd->add_option("--config", run.config_path, "Config file path (key = value format)");
        cmd->add_option("--runs", run.run_count, "Number of independent runs");
        cmd->add_option("--seed", run.base_seed, "Base RNG seed; run i uses seed + i");
        cmd->add_option("--preset", run.preset, "Environment preset: case1, case2, or empty");
        cmd->add_option("--out", run.output_dir, "Output directory");
    };

    CLI::App* bench = app.add_subcommand("bench", "Benchmark-function comparison of BA vs MFBA");
    add_common(bench);
    bench->add_option("--algo", run.algorithm, "Must be 'both' if given");
    bench->add_option("--functions", run.functions,
                      "Subset of benchmark functions (default: all six)")
        ->delimiter(',');

    CLI::App* plan = app.add_subcommand("plan", "Plan missions in a dynamic environment");
    add_common(plan);
    plan->add_option("--algo", run.algorithm, "Algorithm: ba or mfba");

    CLI::App* compare =
        app.add_subcommand("compare", "Run BA and MFBA missions on identical seeds");
    add_common(compare);
    compare->add_option("--algo", run.algorithm, "Must be 'both' if given");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bench->parsed()) return batnav::cmd_bench(run);
        if (plan->parsed()) return batnav::cmd_plan(run);
        return batnav::cmd_compare(run);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
