#include "batnav/perception.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace batnav {

void SensorConfig::validate() const {
    if (sensor_count < 3) throw std::invalid_argument("sensor_count must be >= 3");
    if (!(sensing_range > 0.0)) throw std::invalid_argument("sensing_range must be > 0");
}

bool SensoryVector::any() const {
    return std::any_of(bits.begin(), bits.end(), [](std::uint8_t b) { return b != 0; });
}

namespace {

std::string bits_to_string(const std::vector<std::uint8_t>& bits) {
    std::string s;
    s.reserve(bits.size());
    for (std::uint8_t b : bits) s.push_back(b ? '1' : '0');
    return s;
}

}  // namespace

std::string SensoryVector::to_string() const { return bits_to_string(bits); }

SensoryVector SensoryVector::from_string(std::string_view s) {
    SensoryVector vs;
    vs.bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("sensory vector string must contain only 0/1");
        }
        vs.bits.push_back(c == '1' ? 1 : 0);
    }
    return vs;
}

std::string GapVector::to_string() const { return bits_to_string(bits); }

double arc_sector_overlap_deg(const AngularInterval& arc, double sector_start_deg,
                              double sector_width_deg) {
    if (arc.full_circle()) return sector_width_deg;
    double c = normalize_deg(arc.center_deg);
    double a1 = c - arc.half_width_deg;
    double a2 = c + arc.half_width_deg;
    double overlap = 0.0;
    for (int k = -2; k <= 2; ++k) {
        double s1 = sector_start_deg + 360.0 * k;
        double s2 = s1 + sector_width_deg;
        overlap += std::max(0.0, std::min(a2, s2) - std::max(a1, s1));
    }
    return overlap;
}

std::optional<AngularInterval> tangent_interval(Vec2 robot_point, const Obstacle& obstacle,
                                                double t, double robot_radius,
                                                const SensorConfig& sensors) {
    Vec2 center = obstacle_position(obstacle, t);
    double d = distance(robot_point, center);
    double inflated = inflate_radius(obstacle, robot_radius);
    if (d - inflated > sensors.sensing_range) return std::nullopt;
    if (d <= inflated) {
        // Robot inside the inflated disc: everything is blocked.
        return AngularInterval{0.0, 180.0};
    }
    double half = rad_to_deg(std::asin(inflated / d));
    return AngularInterval{bearing_deg(robot_point, center), half};
}

SensoryVector build_sensory_vector(Vec2 robot_point, std::span<const Obstacle> obstacles,
                                   double t, const SensorConfig& sensors,
                                   double robot_radius) {
    sensors.validate();
    SensoryVector vs;
    vs.bits.assign(sensors.sensor_count, 0);
    const double width = sensors.sector_width_deg();
    for (const Obstacle& obstacle : obstacles) {
        auto arc = tangent_interval(robot_point, obstacle, t, robot_radius, sensors);
        if (!arc) continue;
        for (int i = 0; i < sensors.sensor_count; ++i) {
            if (vs.bits[i]) continue;
            if (arc_sector_overlap_deg(*arc, i * width, width) > kAngularToleranceDeg) {
                vs.bits[i] = 1;
            }
        }
    }
    return vs;
}

GapVector build_gap_vector(const SensoryVector& vs) {
    const std::size_t n = vs.bits.size();
    GapVector vg;
    vg.bits.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        vg.bits[i] = vs.bits[i] | vs.bits[(i + 1) % n];
    }
    return vg;
}

std::optional<double> select_gap(const GapVector& vg, Vec2 robot_point, Vec2 goal) {
    if (vg.bits.empty()) return std::nullopt;
    const int n = static_cast<int>(vg.bits.size());
    const double width = 360.0 / n;
    const double goal_bearing = bearing_deg(robot_point, goal);

    std::optional<double> best;
    double best_distance = 0.0;
    for (int i = 0; i < n; ++i) {
        if (vg.bits[i]) continue;
        // Gap bit i sits on the boundary between sectors i+1 and i+2 (1-based).
        double candidate = normalize_deg((i + 1) * width);
        double d = circular_distance_deg(candidate, goal_bearing);
        if (!best || d < best_distance - kAngularToleranceDeg) {
            best = candidate;
            best_distance = d;
        }
    }
    return best;
}

bool obstacle_detected(const SensoryVector& vs) { return vs.any(); }

}  // namespace batnav
