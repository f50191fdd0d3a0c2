#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "batnav/optimizer.hpp"

namespace batnav {

enum class BenchmarkId { Sphere, Easom, ThreeHumpCamel, Booth, Rastrigin, Michalewicz };

const std::vector<BenchmarkId>& all_benchmarks();
const char* benchmark_name(BenchmarkId id);
BenchmarkId benchmark_from_name(const std::string& name);

struct BenchmarkFunction {
    BenchmarkId id;
    std::string name;
    int dimension;
    SearchSpace bounds;
    double known_fmin;
    Vector known_optimum;
    bool multimodal;
    int steepness = 0;  // Michalewicz only
};

// Sphere and Rastrigin generalize to any dimension; the other four are 2-D.
BenchmarkFunction make_benchmark(BenchmarkId id, int dimension = 2);

// Exact formula value. Throws on dimension mismatch or out-of-bounds input.
double evaluate(const BenchmarkFunction& function, const Vector& x);

struct TrialStatistics {
    std::string function_name;
    std::string algorithm;
    double best = 0.0;
    double worst = 0.0;
    double mean = 0.0;
    double standard_deviation = 0.0;
    int run_count = 0;
    char significance_mark = '.';
};

// Order-insensitive summary with sample (n-1) standard deviation.
TrialStatistics summarize(const std::string& function_name, const std::string& algorithm,
                          std::span<const double> final_values);

// run_count independent optimizations seeded base_seed, base_seed+1, ...
TrialStatistics run_trials(const BenchmarkFunction& function, BetaSchedule algorithm,
                           OptimizerConfig config, int run_count, std::uint64_t base_seed);

// '+' when the MFBA mean is strictly better (smaller), '-' when the means are
// equal within a relative 1e-9, '.' when MFBA is worse. Throws when the two
// statistics come from mismatched runs.
char compare_means(const TrialStatistics& ba, const TrialStatistics& mfba);

}  // namespace batnav
