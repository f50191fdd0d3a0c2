#include "batnav/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace batnav {

namespace {

[[noreturn]] void fail(const std::string& field, double value, const char* constraint) {
    std::ostringstream os;
    os << "invalid " << field << " = " << value << " (requires " << constraint << ")";
    throw std::invalid_argument(os.str());
}

void check_dimension(const Vector& a, const Vector& b, const char* where) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(std::string(where) + ": dimension mismatch");
    }
}

}  // namespace

const char* algorithm_name(BetaSchedule schedule) {
    return schedule == BetaSchedule::StandardBeta ? "Standard BA" : "MFBA";
}

void OptimizerConfig::validate() const {
    if (population_size < 1) fail("population_size", population_size, ">= 1");
    if (!(f_min <= f_max)) fail("f_min", f_min, "f_min <= f_max");
    if (!(alpha > 0.0 && alpha < 1.0)) fail("alpha", alpha, "0 < alpha < 1");
    if (!(gamma > 0.0)) fail("gamma", gamma, "> 0");
    if (!(sigma > 0.0)) fail("sigma", sigma, "> 0");
    if (!(initial_loudness > 0.0)) fail("initial_loudness", initial_loudness, "> 0");
    if (!(initial_pulse_rate >= 0.0 && initial_pulse_rate <= 1.0)) {
        fail("initial_pulse_rate", initial_pulse_rate, "0 <= r(0) <= 1");
    }
    if (max_iterations < 0) fail("max_iterations", max_iterations, ">= 0");
    if (!(rho > 0.0)) fail("rho", rho, "> 0");
    if (!(epsilon > 0.0)) fail("epsilon", epsilon, "> 0");
}

void SearchSpace::validate() const {
    if (lower.empty() || lower.size() != upper.size()) {
        throw std::invalid_argument("search space: lower/upper must be non-empty and equally sized");
    }
    for (std::size_t j = 0; j < lower.size(); ++j) {
        if (!(lower[j] < upper[j])) {
            std::ostringstream os;
            os << "search space: lower[" << j << "] = " << lower[j]
               << " must be < upper[" << j << "] = " << upper[j];
            throw std::invalid_argument(os.str());
        }
    }
}

Vector SearchSpace::clamped(Vector x) const {
    for (std::size_t j = 0; j < x.size(); ++j) {
        x[j] = std::clamp(x[j], lower[j], upper[j]);
    }
    return x;
}

double modified_frequency_beta(int t, int max_iterations, double rho, double r) {
    if (max_iterations < 1) throw std::invalid_argument("modified_frequency_beta: max_iterations must be >= 1");
    double beta = (static_cast<double>(t) / max_iterations) * std::exp(-rho * r);
    return std::clamp(beta, 0.0, 1.0);
}

double compute_beta(BetaSchedule schedule, int t, int max_iterations, double rho,
                    RandomStream& rng) {
    if (t < 1 || t > max_iterations) {
        throw std::invalid_argument("compute_beta: iteration index out of range");
    }
    if (schedule == BetaSchedule::StandardBeta) {
        return rng.uniform01();
    }
    return modified_frequency_beta(t, max_iterations, rho, rng.uniform01());
}

Swarm initialize_population(const OptimizerConfig& config, const SearchSpace& space,
                            const Objective& objective, RandomStream& rng,
                            const SearchHooks* hooks) {
    config.validate();
    space.validate();

    const int n = config.population_size;
    const int dim = space.dimension();

    Swarm swarm;
    swarm.bats.resize(n);
    for (Bat& bat : swarm.bats) {
        bat.position.resize(dim);
        // Rejection sampling against the optional feasibility hook.
        constexpr int kMaxDraws = 1000;
        for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
            for (int j = 0; j < dim; ++j) {
                bat.position[j] = rng.uniform(space.lower[j], space.upper[j]);
            }
            if (!hooks || !hooks->init_accept || hooks->init_accept(bat.position)) break;
            if (attempt == kMaxDraws - 1 && hooks->project) hooks->project(bat.position);
        }
        bat.velocity.assign(dim, 0.0);
        bat.frequency = config.f_min;
        bat.loudness = config.initial_loudness;
        bat.pulse_rate = config.initial_pulse_rate;
        bat.objective_value = objective(bat.position);
        ++swarm.evaluations;
    }

    const Bat& best = *std::min_element(
        swarm.bats.begin(), swarm.bats.end(),
        [](const Bat& a, const Bat& b) { return a.objective_value < b.objective_value; });
    swarm.best_position = best.position;
    swarm.best_value = best.objective_value;
    swarm.iteration = 0;
    return swarm;
}

void apply_frequency_update(Bat& bat, const Vector& global_best, double beta,
                            const OptimizerConfig& config, const SearchSpace& space,
                            const SearchHooks* hooks) {
    check_dimension(bat.position, global_best, "update_bat");
    check_dimension(bat.position, space.lower, "update_bat");

    bat.frequency = config.f_min + (config.f_max - config.f_min) * beta;
    for (std::size_t j = 0; j < bat.position.size(); ++j) {
        bat.velocity[j] += (bat.position[j] - global_best[j]) * bat.frequency;
        bat.position[j] += bat.velocity[j];
    }
    bat.position = space.clamped(std::move(bat.position));
    if (hooks && hooks->project) hooks->project(bat.position);
}

void update_bat(Bat& bat, const Vector& global_best, const OptimizerConfig& config,
                const SearchSpace& space, int t, RandomStream& rng,
                const SearchHooks* hooks) {
    double beta = compute_beta(config.schedule, t, config.max_iterations, config.rho, rng);
    apply_frequency_update(bat, global_best, beta, config, space, hooks);
}

Vector local_random_walk(const Vector& x_base, double mean_loudness,
                         const OptimizerConfig& config, const SearchSpace& space,
                         RandomStream& rng, const SearchHooks* hooks) {
    if (mean_loudness < 0.0) {
        throw std::invalid_argument("local_random_walk: mean loudness must be >= 0");
    }
    Vector x = x_base;
    for (double& coord : x) {
        coord += config.sigma * rng.symmetric() * mean_loudness;
    }
    x = space.clamped(std::move(x));
    if (hooks && hooks->project) hooks->project(x);
    return x;
}

void update_loudness_and_pulse(Bat& bat, const OptimizerConfig& config, int t) {
    bat.loudness *= config.alpha;
    bat.pulse_rate = config.initial_pulse_rate * (1.0 - std::exp(-config.gamma * t));
}

void step(Swarm& swarm, const Objective& objective, const OptimizerConfig& config,
          const SearchSpace& space, int t, RandomStream& rng, const SearchHooks* hooks) {
    double mean_loudness =
        std::accumulate(swarm.bats.begin(), swarm.bats.end(), 0.0,
                        [](double acc, const Bat& b) { return acc + b.loudness; }) /
        static_cast<double>(swarm.bats.size());

    for (Bat& bat : swarm.bats) {
        const Vector previous_position = bat.position;
        const double previous_value = bat.objective_value;

        update_bat(bat, swarm.best_position, config, space, t, rng, hooks);
        if (rng.uniform01() > bat.pulse_rate) {
            bat.position = local_random_walk(swarm.best_position, mean_loudness, config,
                                             space, rng, hooks);
        }

        const Vector candidate = bat.position;
        const double candidate_value = objective(candidate);
        ++swarm.evaluations;

        const bool accepted =
            rng.uniform01() < bat.loudness && candidate_value < previous_value;
        if (accepted) {
            bat.objective_value = candidate_value;
            update_loudness_and_pulse(bat, config, t);
        } else {
            bat.position = previous_position;
            bat.objective_value = previous_value;
        }

        // The global best tracks every evaluated candidate, accepted or not.
        if (candidate_value < swarm.best_value) {
            swarm.best_value = candidate_value;
            swarm.best_position = candidate;
        }
    }
    swarm.iteration = t;
}

OptimizationResult optimize(const Objective& objective, const SearchSpace& space,
                            const OptimizerConfig& config, const SearchHooks* hooks) {
    config.validate();
    space.validate();

    RandomStream rng(config.rng_seed);
    Swarm swarm = initialize_population(config, space, objective, rng, hooks);

    OptimizationResult result;
    result.value_history.reserve(config.max_iterations + 1);
    result.value_history.push_back(swarm.best_value);
    for (int t = 1; t <= config.max_iterations; ++t) {
        step(swarm, objective, config, space, t, rng, hooks);
        result.value_history.push_back(swarm.best_value);
    }
    result.best_position = swarm.best_position;
    result.best_value = swarm.best_value;
    result.evaluations = swarm.evaluations;
    return result;
}

}  // namespace batnav
