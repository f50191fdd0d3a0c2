#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "batnav/random.hpp"

namespace batnav {

using Vector = std::vector<double>;
using Objective = std::function<double(const Vector&)>;

// Frequency mixing schedules. StandardBeta draws beta uniformly per update;
// ModifiedFrequency grows beta with the iteration count so the search shifts
// from exploration to exploitation.
enum class BetaSchedule { StandardBeta, ModifiedFrequency };

const char* algorithm_name(BetaSchedule schedule);  // "Standard BA" / "MFBA"

struct OptimizerConfig {
    int population_size = 5;
    double f_min = 0.0;
    double f_max = 10.0;
    double alpha = 0.98;           // loudness decay factor, in (0,1)
    double gamma = 0.8;            // pulse-rate growth rate, > 0
    double sigma = 0.3;            // random-walk step scale, > 0
    double initial_loudness = 1.0;
    double initial_pulse_rate = 0.5;
    int max_iterations = 500;
    std::uint64_t rng_seed = 1;
    BetaSchedule schedule = BetaSchedule::ModifiedFrequency;
    double rho = 0.01;             // frequency-growth damping, > 0
    double epsilon = 1e-3;         // small regularizer used by distance fitness

    // Throws std::invalid_argument naming the offending field.
    void validate() const;

    friend bool operator==(const OptimizerConfig&, const OptimizerConfig&) = default;
};

// Box search region. lower[j] < upper[j] must hold for every coordinate.
struct SearchSpace {
    Vector lower;
    Vector upper;

    int dimension() const { return static_cast<int>(lower.size()); }
    void validate() const;
    Vector clamped(Vector x) const;
};

// One candidate solution.
struct Bat {
    Vector position;
    Vector velocity;
    double frequency = 0.0;
    double loudness = 1.0;
    double pulse_rate = 0.5;
    double objective_value = 0.0;
};

struct Swarm {
    std::vector<Bat> bats;
    Vector best_position;
    double best_value = 0.0;
    long evaluations = 0;
    int iteration = 0;
};

struct OptimizationResult {
    Vector best_position;
    double best_value = 0.0;
    // best_value after each iteration; entry 0 is the initial population's best.
    std::vector<double> value_history;
    long evaluations = 0;
};

// Optional feasible-region hooks layered on top of the box bounds.
// init_accept filters initial samples (rejected samples are redrawn);
// project repairs a candidate in place after bound clamping.
struct SearchHooks {
    std::function<bool(const Vector&)> init_accept;
    std::function<void(Vector&)> project;
};

// beta = (t/T) * exp(-rho * r), clamped to [0,1]. Deterministic kernel of the
// modified schedule; r is the uniform draw.
double modified_frequency_beta(int t, int max_iterations, double rho, double r);

// Draws beta in [0,1] for iteration t (1-based, t <= max_iterations).
double compute_beta(BetaSchedule schedule, int t, int max_iterations, double rho,
                    RandomStream& rng);

Swarm initialize_population(const OptimizerConfig& config, const SearchSpace& space,
                            const Objective& objective, RandomStream& rng,
                            const SearchHooks* hooks = nullptr);

// Frequency/velocity/position update with an explicit beta:
//   f_i = f_min + (f_max - f_min) * beta
//   v_i += (x_i - x*) * f_i
//   x_i += v_i, then clamped to the space (and projected via hooks).
void apply_frequency_update(Bat& bat, const Vector& global_best, double beta,
                            const OptimizerConfig& config, const SearchSpace& space,
                            const SearchHooks* hooks = nullptr);

// apply_frequency_update with beta drawn from the configured schedule.
void update_bat(Bat& bat, const Vector& global_best, const OptimizerConfig& config,
                const SearchSpace& space, int t, RandomStream& rng,
                const SearchHooks* hooks = nullptr);

// x_base + sigma * eps * mean_loudness with eps uniform in [-1,1] per
// coordinate, clamped to the space.
Vector local_random_walk(const Vector& x_base, double mean_loudness,
                         const OptimizerConfig& config, const SearchSpace& space,
                         RandomStream& rng, const SearchHooks* hooks = nullptr);

// On acceptance: A_i <- alpha * A_i, r_i <- r(0) * (1 - exp(-gamma * t)).
void update_loudness_and_pulse(Bat& bat, const OptimizerConfig& config, int t);

// One iteration over the whole swarm.
void step(Swarm& swarm, const Objective& objective, const OptimizerConfig& config,
          const SearchSpace& space, int t, RandomStream& rng,
          const SearchHooks* hooks = nullptr);

// Full run: initialize, then config.max_iterations steps. Deterministic for a
// fixed (config, space, objective) triple.
OptimizationResult optimize(const Objective& objective, const SearchSpace& space,
                            const OptimizerConfig& config,
                            const SearchHooks* hooks = nullptr);

}  // namespace batnav
