#include "batnav/environment.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace batnav {

void EnvironmentSpec::validate() const {
    if (!(bounds.min.x < bounds.max.x && bounds.min.y < bounds.max.y)) {
        throw std::invalid_argument("environment: bounds must have positive extent");
    }
    if (!bounds.contains(start)) throw std::invalid_argument("environment: start outside bounds");
    if (!bounds.contains(goal)) throw std::invalid_argument("environment: goal outside bounds");
    if (start == goal) throw std::invalid_argument("environment: start equals goal");
    if (!(time_step > 0.0)) throw std::invalid_argument("environment: time_step must be > 0");
    for (std::size_t i = 0; i < obstacles.size(); ++i) {
        if (!(obstacles[i].radius > 0.0)) {
            throw std::invalid_argument("obstacle " + std::to_string(i + 1) +
                                        ": radius must be > 0");
        }
        if (obstacles[i].speed < 0.0) {
            throw std::invalid_argument("obstacle " + std::to_string(i + 1) +
                                        ": speed must be >= 0");
        }
    }
}

EnvironmentSpec preset_environment(std::string_view name) {
    EnvironmentSpec spec;
    if (name == "empty") {
        return spec;
    }
    if (name == "case1") {
        spec.obstacles = {
            {{1.0, 4.5}, 0.3, 0.3, 0.0},
            {{10.5, 6.0}, 0.3, 0.2, 180.0},
            {{6.0, 12.0}, 0.3, 0.15, 270.0},
        };
        return spec;
    }
    if (name == "case2") {
        spec.obstacles = {
            {{4.0, 2.0}, 0.3, 0.3, 111.8},
            {{3.0, 7.0}, 0.3, 0.2, 315.0},
            {{9.0, 4.0}, 0.3, 0.2, 126.8},
            {{7.0, 9.0}, 0.3, 0.25, 315.0},
            {{11.2, 7.0}, 0.3, 0.22, 150.0},
        };
        return spec;
    }
    throw std::invalid_argument("unknown environment preset '" + std::string(name) + "'");
}

Vec2 obstacle_position(const Obstacle& obstacle, double t) {
    return obstacle.initial_center +
           obstacle.speed * t * unit_from_bearing_deg(obstacle.heading_deg);
}

double inflate_radius(const Obstacle& obstacle, double robot_radius) {
    return obstacle.radius + robot_radius;
}

bool collision(Vec2 robot_point, const Obstacle& obstacle, double t, double robot_radius) {
    return distance(robot_point, obstacle_position(obstacle, t)) <
           inflate_radius(obstacle, robot_radius);
}

double segment_length(Vec2 p, Vec2 q) { return distance(p, q); }

double fitness(Vec2 candidate, Vec2 reference, double epsilon) {
    return 1.0 / (segment_length(candidate, reference) + epsilon);
}

double path_length(std::span<const Vec2> waypoints) {
    if (waypoints.size() < 2) {
        throw std::invalid_argument("path_length: need at least 2 waypoints");
    }
    double total = 0.0;
    for (std::size_t i = 1; i < waypoints.size(); ++i) {
        total += segment_length(waypoints[i - 1], waypoints[i]);
    }
    return total;
}

}  // namespace batnav
