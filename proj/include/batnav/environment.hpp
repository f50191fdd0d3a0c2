#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "batnav/geometry.hpp"

namespace batnav {

// Circular obstacle moving in a straight line at constant speed.
struct Obstacle {
    Vec2 initial_center;
    double radius = 0.3;       // m
    double speed = 0.0;        // m/s
    double heading_deg = 0.0;  // world frame

    friend bool operator==(const Obstacle&, const Obstacle&) = default;
};

struct RobotState {
    Vec2 position;
    double radius = 0.3;  // m
};

struct EnvironmentSpec {
    Rect bounds{{0.0, 0.0}, {13.0, 13.0}};
    Vec2 start{0.0, 0.0};
    Vec2 goal{12.0, 12.0};
    std::vector<Obstacle> obstacles;
    double time_step = 1.0;  // s per planner cycle

    void validate() const;

    friend bool operator==(const EnvironmentSpec&, const EnvironmentSpec&) = default;
};

// Named presets: "case1" (three obstacles), "case2" (five obstacles), "empty".
EnvironmentSpec preset_environment(std::string_view name);

Vec2 obstacle_position(const Obstacle& obstacle, double t);

// Obstacle radius grown by the robot radius; the robot is a point afterwards.
double inflate_radius(const Obstacle& obstacle, double robot_radius);

// Strict inequality: tangency does not collide.
bool collision(Vec2 robot_point, const Obstacle& obstacle, double t, double robot_radius);

double segment_length(Vec2 p, Vec2 q);

// 1 / (distance + epsilon); larger is closer.
double fitness(Vec2 candidate, Vec2 reference, double epsilon);

// Sum of consecutive segment lengths; requires at least 2 waypoints.
double path_length(std::span<const Vec2> waypoints);

}  // namespace batnav
