#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numeric>

#include "batnav/optimizer.hpp"

using namespace batnav;

namespace {

OptimizerConfig default_config() { return OptimizerConfig{}; }

SearchSpace square(double lo, double hi) { return {{lo, lo}, {hi, hi}}; }

double sphere(const Vector& x) {
    double sum = 0.0;
    for (double xi : x) sum += xi * xi;
    return sum;
}

}  // namespace

TEST_CASE("config invariants are enforced") {
    OptimizerConfig config = default_config();
    CHECK_NOTHROW(config.validate());

    config.alpha = 1.5;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = default_config();
    config.f_min = 11.0;  // above f_max
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = default_config();
    config.sigma = 0.0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = default_config();
    config.rho = -1.0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = default_config();
    config.initial_pulse_rate = 1.2;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}

TEST_CASE("degenerate search space is rejected") {
    SearchSpace space{{0.0, 1.0}, {1.0, 1.0}};  // zero width in y
    CHECK_THROWS_AS(space.validate(), std::invalid_argument);
}

TEST_CASE("initial population lies inside the bounds") {
    OptimizerConfig config = default_config();
    SearchSpace space = square(-5.12, 5.12);
    RandomStream rng(123);
    Swarm swarm = initialize_population(config, space, sphere, rng);

    CHECK(swarm.bats.size() == 5);
    for (const Bat& bat : swarm.bats) {
        for (double coord : bat.position) {
            CHECK(coord >= -5.12);
            CHECK(coord <= 5.12);
        }
        CHECK(bat.velocity == Vector{0.0, 0.0});
        CHECK(bat.loudness == 1.0);
        CHECK(bat.pulse_rate == 0.5);
    }
    // Global best is the population minimizer.
    double best = swarm.bats.front().objective_value;
    for (const Bat& bat : swarm.bats) best = std::min(best, bat.objective_value);
    CHECK(swarm.best_value == best);
    CHECK(swarm.evaluations == 5);
}

TEST_CASE("initialization with a fixed seed is repeatable") {
    OptimizerConfig config = default_config();
    SearchSpace space = square(-5.12, 5.12);
    RandomStream rng_a(42), rng_b(42);
    Swarm a = initialize_population(config, space, sphere, rng_a);
    Swarm b = initialize_population(config, space, sphere, rng_b);
    for (std::size_t i = 0; i < a.bats.size(); ++i) {
        CHECK(a.bats[i].position == b.bats[i].position);
        CHECK(a.bats[i].objective_value == b.bats[i].objective_value);
    }
}

TEST_CASE("modified frequency beta kernel") {
    SUBCASE("vanishes at the start") {
        CHECK(modified_frequency_beta(0, 100, 0.01, 0.5) == 0.0);
        CHECK(modified_frequency_beta(1, 1000000, 0.01, 0.5) < 1e-5);
    }
    SUBCASE("reaches one at t = T with r = 0") {
        CHECK(modified_frequency_beta(100, 100, 0.01, 0.0) == 1.0);
    }
    SUBCASE("Monte-Carlo mean at mid-run matches the closed form") {
        // E[beta] at t = 50, T = 100 is 0.5 * (1 - e^-rho) / rho.
        const double expected = 0.5 * (1.0 - std::exp(-0.01)) / 0.01;
        RandomStream rng(99);
        double sum = 0.0;
        const int samples = 10000;
        for (int i = 0; i < samples; ++i) {
            sum += compute_beta(BetaSchedule::ModifiedFrequency, 50, 100, 0.01, rng);
        }
        CHECK(sum / samples == doctest::Approx(expected).epsilon(2e-3));
        CHECK(expected == doctest::Approx(0.4975).epsilon(1e-3));
    }
}

TEST_CASE("beta containment for both schedules") {
    RandomStream rng(4);
    for (int trial = 0; trial < 2000; ++trial) {
        int T = 1 + static_cast<int>(rng.uniform(0.0, 500.0));
        int t = 1 + static_cast<int>(rng.uniform(0.0, T));
        t = std::min(t, T);
        for (BetaSchedule schedule :
             {BetaSchedule::StandardBeta, BetaSchedule::ModifiedFrequency}) {
            double beta = compute_beta(schedule, t, T, 0.01, rng);
            CHECK(beta >= 0.0);
            CHECK(beta <= 1.0);
        }
    }
}

TEST_CASE("modified schedule's expected beta increases with t") {
    const int T = 100;
    double previous = -1.0;
    for (int t = 10; t <= T; t += 10) {
        RandomStream rng(500 + t);
        double sum = 0.0;
        for (int i = 0; i < 10000; ++i) {
            sum += compute_beta(BetaSchedule::ModifiedFrequency, t, T, 0.01, rng);
        }
        double mean = sum / 10000.0;
        CHECK(mean > previous + 0.05);  // true gap is ~0.0995 per decade
        previous = mean;
    }
}

TEST_CASE("frequency update follows the velocity and position equations") {
    OptimizerConfig config = default_config();
    SearchSpace space = square(-10.0, 10.0);

    SUBCASE("hand-evaluated step") {
        Bat bat{{1.0, 0.0}, {0.0, 0.0}, 0.0, 1.0, 0.5, 0.0};
        // beta = 0.2 gives f = 2 with f_min = 0, f_max = 10.
        apply_frequency_update(bat, {0.0, 0.0}, 0.2, config, space);
        CHECK(bat.frequency == doctest::Approx(2.0));
        CHECK(bat.velocity[0] == doctest::Approx(2.0));
        CHECK(bat.velocity[1] == 0.0);
        CHECK(bat.position[0] == doctest::Approx(3.0));
        CHECK(bat.position[1] == 0.0);
    }
    SUBCASE("beta = 1 pins the frequency at f_max") {
        Bat bat{{1.0, 1.0}, {0.0, 0.0}, 0.0, 1.0, 0.5, 0.0};
        apply_frequency_update(bat, {0.0, 0.0}, 1.0, config, space);
        CHECK(bat.frequency == 10.0);
    }
    SUBCASE("a bat sitting on the best with zero velocity stays put") {
        Bat bat{{2.0, -3.0}, {0.0, 0.0}, 0.0, 1.0, 0.5, 0.0};
        apply_frequency_update(bat, {2.0, -3.0}, 0.7, config, space);
        CHECK(bat.velocity == Vector{0.0, 0.0});
        CHECK(bat.position == Vector{2.0, -3.0});
    }
    SUBCASE("position is clamped to the bounds") {
        SearchSpace tight = square(-1.0, 1.0);
        Bat bat{{1.0, 1.0}, {5.0, 5.0}, 0.0, 1.0, 0.5, 0.0};
        apply_frequency_update(bat, {0.0, 0.0}, 1.0, config, tight);
        CHECK(bat.position[0] <= 1.0);
        CHECK(bat.position[1] <= 1.0);
    }
    SUBCASE("dimension mismatch is an error") {
        Bat bat{{1.0, 0.0}, {0.0, 0.0}, 0.0, 1.0, 0.5, 0.0};
        CHECK_THROWS_AS(apply_frequency_update(bat, {0.0}, 0.5, config, space),
                        std::invalid_argument);
    }
}

TEST_CASE("frequency containment across a whole run") {
    OptimizerConfig config = default_config();
    SearchSpace space = square(-5.12, 5.12);
    for (BetaSchedule schedule :
         {BetaSchedule::StandardBeta, BetaSchedule::ModifiedFrequency}) {
        config.schedule = schedule;
        config.max_iterations = 60;
        RandomStream rng(11);
        Swarm swarm = initialize_population(config, space, sphere, rng);
        for (int t = 1; t <= config.max_iterations; ++t) {
            step(swarm, sphere, config, space, t, rng);
            for (const Bat& bat : swarm.bats) {
                CHECK(bat.frequency >= config.f_min);
                CHECK(bat.frequency <= config.f_max);
            }
        }
    }
}

TEST_CASE("local random walk") {
    OptimizerConfig config = default_config();
    SearchSpace space = square(-5.0, 5.0);

    SUBCASE("zero mean loudness leaves the base point unchanged") {
        RandomStream rng(3);
        Vector base{0.5, -0.25};
        CHECK(local_random_walk(base, 0.0, config, space, rng) == base);
    }
    SUBCASE("per-coordinate displacement is bounded by sigma * loudness") {
        RandomStream rng(5);
        Vector base{0.0, 0.0};
        for (int i = 0; i < 1000; ++i) {
            Vector x = local_random_walk(base, 1.0, config, space, rng);
            for (double coord : x) CHECK(std::fabs(coord) <= 0.3);
        }
    }
    SUBCASE("displacements look uniform on [-sigma*A, sigma*A]") {
        RandomStream rng(17);
        Vector base{0.0, 0.0};
        const int samples = 10000;
        double sum = 0.0, sum_sq = 0.0, low = 0.0, high = 0.0;
        for (int i = 0; i < samples; ++i) {
            Vector x = local_random_walk(base, 1.0, config, space, rng);
            sum += x[0];
            sum_sq += x[0] * x[0];
            low = std::min(low, x[0]);
            high = std::max(high, x[0]);
        }
        double mean = sum / samples;
        double variance = sum_sq / samples - mean * mean;
        CHECK(std::fabs(mean) < 0.006);                       // SE is ~0.0017
        CHECK(variance == doctest::Approx(0.03).epsilon(0.1));  // (2*0.3)^2 / 12
        CHECK(low < -0.28);                                   // both tails reached
        CHECK(high > 0.28);
    }
    SUBCASE("negative mean loudness is rejected") {
        RandomStream rng(1);
        CHECK_THROWS_AS(local_random_walk({0.0, 0.0}, -1.0, config, space, rng),
                        std::invalid_argument);
    }
}

TEST_CASE("loudness and pulse-rate updates") {
    OptimizerConfig config = default_config();

    SUBCASE("single update scales loudness by alpha") {
        Bat bat{{0.0}, {0.0}, 0.0, 1.0, 0.5, 0.0};
        update_loudness_and_pulse(bat, config, 1);
        CHECK(bat.loudness == doctest::Approx(0.98).epsilon(1e-15));
    }
    SUBCASE("pulse rate at t = 0 is zero") {
        Bat bat{{0.0}, {0.0}, 0.0, 1.0, 0.5, 0.0};
        update_loudness_and_pulse(bat, config, 0);
        CHECK(bat.pulse_rate == 0.0);
    }
    SUBCASE("pulse rate at t = 3 matches the closed form") {
        Bat bat{{0.0}, {0.0}, 0.0, 1.0, 0.5, 0.0};
        update_loudness_and_pulse(bat, config, 3);
        CHECK(bat.pulse_rate == doctest::Approx(0.45464102335529375).epsilon(1e-12));
        CHECK(bat.pulse_rate == doctest::Approx(0.45465).epsilon(1e-4));
    }
    SUBCASE("k accepted updates give exactly A(0) * alpha^k") {
        Bat bat{{0.0}, {0.0}, 0.0, 1.0, 0.5, 0.0};
        for (int k = 1; k <= 60; ++k) {
            update_loudness_and_pulse(bat, config, k);
            CHECK(bat.loudness ==
                  doctest::Approx(std::pow(config.alpha, k)).epsilon(1e-12));
        }
    }
    SUBCASE("pulse rate is non-decreasing and stays below r(0)") {
        Bat bat{{0.0}, {0.0}, 0.0, 1.0, 0.5, 0.0};
        double previous = -1.0;
        for (int t = 0; t <= 200; ++t) {
            update_loudness_and_pulse(bat, config, t);
            CHECK(bat.pulse_rate >= previous);
            CHECK(bat.pulse_rate <= config.initial_pulse_rate);
            // Strictly below r(0) until exp(-gamma*t) sinks under one ulp.
            if (t <= 45) CHECK(bat.pulse_rate < config.initial_pulse_rate);
            previous = bat.pulse_rate;
        }
        CHECK(previous == doctest::Approx(config.initial_pulse_rate).epsilon(1e-12));
    }
}

TEST_CASE("step keeps the global best monotone") {
    OptimizerConfig config = default_config();
    SearchSpace space = square(-5.12, 5.12);

    SUBCASE("constant objective never improves") {
        Objective constant = [](const Vector&) { return 7.0; };
        RandomStream rng(13);
        Swarm swarm = initialize_population(config, space, constant, rng);
        for (int t = 1; t <= 50; ++t) {
            step(swarm, constant, config, space, t, rng);
            CHECK(swarm.best_value == 7.0);
        }
    }
    SUBCASE("sphere best never worsens over 100 iterations") {
        config.max_iterations = 100;
        RandomStream rng(21);
        Swarm swarm = initialize_population(config, space, sphere, rng);
        double previous = swarm.best_value;
        for (int t = 1; t <= 100; ++t) {
            step(swarm, sphere, config, space, t, rng);
            CHECK(swarm.best_value <= previous);
            previous = swarm.best_value;
        }
    }
}

TEST_CASE("every evaluated position stays inside the bounds") {
    OptimizerConfig config = default_config();
    config.max_iterations = 80;
    SearchSpace space = square(-2.5, 1.5);
    Objective checked = [&space](const Vector& x) {
        for (std::size_t j = 0; j < x.size(); ++j) {
            CHECK(x[j] >= space.lower[j]);
            CHECK(x[j] <= space.upper[j]);
        }
        return sphere(x);
    };
    optimize(checked, space, config);
}

TEST_CASE("optimize") {
    SearchSpace space = square(-5.12, 5.12);

    SUBCASE("zero iterations returns the initial best") {
        OptimizerConfig config = default_config();
        config.max_iterations = 0;
        config.rng_seed = 9;
        OptimizationResult result = optimize(sphere, space, config);
        CHECK(result.value_history.size() == 1);
        CHECK(result.evaluations == config.population_size);
        CHECK(result.best_value == sphere(result.best_position));
    }
    SUBCASE("identical seeds give bit-identical results") {
        OptimizerConfig config = default_config();
        config.max_iterations = 120;
        config.rng_seed = 77;
        OptimizationResult a = optimize(sphere, space, config);
        OptimizationResult b = optimize(sphere, space, config);
        CHECK(a.best_position == b.best_position);
        CHECK(a.best_value == b.best_value);
        CHECK(a.value_history == b.value_history);
        CHECK(a.evaluations == b.evaluations);
    }
    SUBCASE("value history is non-increasing") {
        OptimizerConfig config = default_config();
        config.max_iterations = 200;
        config.rng_seed = 31;
        for (BetaSchedule schedule :
             {BetaSchedule::StandardBeta, BetaSchedule::ModifiedFrequency}) {
            config.schedule = schedule;
            OptimizationResult result = optimize(sphere, space, config);
            for (std::size_t i = 1; i < result.value_history.size(); ++i) {
                CHECK(result.value_history[i] <= result.value_history[i - 1]);
            }
        }
    }
    SUBCASE("15 MFBA sphere runs average near the expected order of magnitude") {
        OptimizerConfig config = default_config();
        config.max_iterations = 500;
        double sum = 0.0;
        for (int run = 0; run < 15; ++run) {
            config.rng_seed = 1000 + run;
            sum += optimize(sphere, space, config).best_value;
        }
        CHECK(sum / 15.0 < 0.1);  // typical means sit near 5e-3
    }
}
