#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "batnav/environment.hpp"
#include "batnav/geometry.hpp"

namespace batnav {

// Angular overlaps and distance ties below this many degrees are treated as
// measure-zero and ignored, so boundary touches are deterministic under
// floating-point rounding.
inline constexpr double kAngularToleranceDeg = 1e-9;

struct SensorConfig {
    int sensor_count = 12;
    double sensing_range = 0.8;  // m

    double sector_width_deg() const { return 360.0 / sensor_count; }
    void validate() const;

    friend bool operator==(const SensorConfig&, const SensorConfig&) = default;
};

// Per-sector occupancy bits; bits[i] covers [i*width, (i+1)*width) in the
// world frame.
struct SensoryVector {
    std::vector<std::uint8_t> bits;

    bool any() const;
    std::string to_string() const;  // e.g. "110000111000"
    static SensoryVector from_string(std::string_view s);

    friend bool operator==(const SensoryVector&, const SensoryVector&) = default;
};

// Circular pairwise OR of a sensory vector; zeros mark traversable gaps.
struct GapVector {
    std::vector<std::uint8_t> bits;

    std::string to_string() const;

    friend bool operator==(const GapVector&, const GapVector&) = default;
};

// Circular arc around center_deg; half_width_deg of 180 means the full circle.
struct AngularInterval {
    double center_deg = 0.0;
    double half_width_deg = 0.0;

    bool full_circle() const { return half_width_deg >= 180.0; }
    double start_deg() const { return normalize_deg(center_deg - half_width_deg); }
    double end_deg() const { return normalize_deg(center_deg + half_width_deg); }
};

// Length (degrees) of the overlap between an arc and the sector
// [sector_start, sector_start + sector_width].
double arc_sector_overlap_deg(const AngularInterval& arc, double sector_start_deg,
                              double sector_width_deg);

// Arc of bearings blocked by the inflated obstacle as seen from the robot:
// none when the inflated disc is out of sensing range, the full circle when
// the robot is inside it, and [bearing - asin(R/d), bearing + asin(R/d)]
// otherwise.
std::optional<AngularInterval> tangent_interval(Vec2 robot_point, const Obstacle& obstacle,
                                                double t, double robot_radius,
                                                const SensorConfig& sensors);

SensoryVector build_sensory_vector(Vec2 robot_point, std::span<const Obstacle> obstacles,
                                   double t, const SensorConfig& sensors,
                                   double robot_radius);

GapVector build_gap_vector(const SensoryVector& vs);

// Escape bearing (degrees): the boundary bearing i*width of the free gap bit
// nearest the robot-to-goal bearing; ties go to the smaller index. nullopt
// when every bit is occupied.
std::optional<double> select_gap(const GapVector& vg, Vec2 robot_point, Vec2 goal);

bool obstacle_detected(const SensoryVector& vs);

}  // namespace batnav
