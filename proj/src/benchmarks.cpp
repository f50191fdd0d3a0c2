#include "batnav/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "batnav/geometry.hpp"

namespace batnav {

namespace {

SearchSpace uniform_bounds(int dimension, double lo, double hi) {
    return {Vector(dimension, lo), Vector(dimension, hi)};
}

double sphere(const Vector& x) {
    double sum = 0.0;
    for (double xi : x) sum += xi * xi;
    return sum;
}

double easom(const Vector& x) {
    double dx = x[0] - kPi;
    double dy = x[1] - kPi;
    return -std::cos(x[0]) * std::cos(x[1]) * std::exp(-dx * dx - dy * dy);
}

double three_hump_camel(const Vector& x) {
    double x1 = x[0], x2 = x[1];
    double x1sq = x1 * x1;
    return 2.0 * x1sq - 1.05 * x1sq * x1sq + x1sq * x1sq * x1sq / 6.0 + x1 * x2 + x2 * x2;
}

double booth(const Vector& x) {
    double a = x[0] + 2.0 * x[1] - 7.0;
    double b = 2.0 * x[0] + x[1] - 5.0;
    return a * a + b * b;
}

double rastrigin(const Vector& x) {
    double sum = 10.0 * static_cast<double>(x.size());
    for (double xi : x) sum += xi * xi - 10.0 * std::cos(2.0 * kPi * xi);
    return sum;
}

double michalewicz(const Vector& x, int m) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double s = std::sin(static_cast<double>(i + 1) * x[i] * x[i] / kPi);
        sum += std::sin(x[i]) * std::pow(s, 2 * m);
    }
    return -sum;
}

}  // namespace

const std::vector<BenchmarkId>& all_benchmarks() {
    static const std::vector<BenchmarkId> ids = {
        BenchmarkId::Sphere,      BenchmarkId::Easom,     BenchmarkId::ThreeHumpCamel,
        BenchmarkId::Booth,       BenchmarkId::Rastrigin, BenchmarkId::Michalewicz};
    return ids;
}

const char* benchmark_name(BenchmarkId id) {
    switch (id) {
        case BenchmarkId::Sphere: return "sphere";
        case BenchmarkId::Easom: return "easom";
        case BenchmarkId::ThreeHumpCamel: return "three_hump_camel";
        case BenchmarkId::Booth: return "booth";
        case BenchmarkId::Rastrigin: return "rastrigin";
        case BenchmarkId::Michalewicz: return "michalewicz";
    }
    throw std::invalid_argument("unknown benchmark id");
}

BenchmarkId benchmark_from_name(const std::string& name) {
    for (BenchmarkId id : all_benchmarks()) {
        if (name == benchmark_name(id)) return id;
    }
    throw std::invalid_argument("unknown benchmark function '" + name + "'");
}

BenchmarkFunction make_benchmark(BenchmarkId id, int dimension) {
    if (dimension < 1) throw std::invalid_argument("benchmark dimension must be >= 1");
    switch (id) {
        case BenchmarkId::Sphere:
            return {id, "sphere", dimension, uniform_bounds(dimension, -5.12, 5.12),
                    0.0, Vector(dimension, 0.0), false};
        case BenchmarkId::Easom:
            return {id, "easom", 2, uniform_bounds(2, -100.0, 100.0),
                    -1.0, {kPi, kPi}, false};
        case BenchmarkId::ThreeHumpCamel:
            return {id, "three_hump_camel", 2, uniform_bounds(2, -5.0, 5.0),
                    0.0, {0.0, 0.0}, true};
        case BenchmarkId::Booth:
            return {id, "booth", 2, uniform_bounds(2, -10.0, 10.0),
                    0.0, {1.0, 3.0}, false};
        case BenchmarkId::Rastrigin:
            return {id, "rastrigin", dimension, uniform_bounds(dimension, -5.12, 5.12),
                    0.0, Vector(dimension, 0.0), true};
        case BenchmarkId::Michalewicz:
            // 2-D optimum coordinates are only known numerically.
            return {id, "michalewicz", 2, uniform_bounds(2, 0.0, kPi),
                    -1.8013, {2.2029055201726093, 1.5707963267948966}, true, 10};
    }
    throw std::invalid_argument("unknown benchmark id");
}

double evaluate(const BenchmarkFunction& function, const Vector& x) {
    if (static_cast<int>(x.size()) != function.dimension) {
        std::ostringstream os;
        os << function.name << ": expected dimension " << function.dimension << ", got "
           << x.size();
        throw std::invalid_argument(os.str());
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] < function.bounds.lower[j] || x[j] > function.bounds.upper[j]) {
            std::ostringstream os;
            os << function.name << ": x[" << j << "] = " << x[j] << " outside ["
               << function.bounds.lower[j] << ", " << function.bounds.upper[j] << "]";
            throw std::invalid_argument(os.str());
        }
    }
    switch (function.id) {
        case BenchmarkId::Sphere: return sphere(x);
        case BenchmarkId::Easom: return easom(x);
        case BenchmarkId::ThreeHumpCamel: return three_hump_camel(x);
        case BenchmarkId::Booth: return booth(x);
        case BenchmarkId::Rastrigin: return rastrigin(x);
        case BenchmarkId::Michalewicz: return michalewicz(x, function.steepness);
    }
    throw std::invalid_argument("unknown benchmark id");
}

TrialStatistics summarize(const std::string& function_name, const std::string& algorithm,
                          std::span<const double> final_values) {
    if (final_values.size() < 2) {
        throw std::invalid_argument("summarize: need at least 2 runs");
    }
    // Sorted accumulation makes the statistics bit-identical under any
    // permutation of the per-run results.
    std::vector<double> values(final_values.begin(), final_values.end());
    std::sort(values.begin(), values.end());

    TrialStatistics stats;
    stats.function_name = function_name;
    stats.algorithm = algorithm;
    stats.run_count = static_cast<int>(values.size());
    stats.best = values.front();
    stats.worst = values.back();

    double sum = 0.0;
    for (double v : values) sum += v;
    stats.mean = sum / static_cast<double>(stats.run_count);

    double ssq = 0.0;
    for (double v : values) {
        double d = v - stats.mean;
        ssq += d * d;
    }
    stats.standard_deviation = std::sqrt(ssq / static_cast<double>(stats.run_count - 1));
    return stats;
}

TrialStatistics run_trials(const BenchmarkFunction& function, BetaSchedule algorithm,
                           OptimizerConfig config, int run_count, std::uint64_t base_seed) {
    if (run_count < 2) throw std::invalid_argument("run_trials: run_count must be >= 2");
    config.schedule = algorithm;

    std::vector<double> finals;
    finals.reserve(run_count);
    Objective objective = [&function](const Vector& x) { return evaluate(function, x); };
    for (int run = 0; run < run_count; ++run) {
        config.rng_seed = base_seed + static_cast<std::uint64_t>(run);
        finals.push_back(optimize(objective, function.bounds, config).best_value);
    }
    return summarize(function.name, algorithm_name(algorithm), finals);
}

char compare_means(const TrialStatistics& ba, const TrialStatistics& mfba) {
    if (ba.function_name != mfba.function_name || ba.run_count != mfba.run_count) {
        throw std::invalid_argument("compare_means: statistics come from mismatched runs");
    }
    double scale = std::max(std::fabs(ba.mean), std::fabs(mfba.mean));
    if (std::fabs(ba.mean - mfba.mean) <= 1e-9 * scale) return '-';
    return mfba.mean < ba.mean ? '+' : '.';
}

}  // namespace batnav
