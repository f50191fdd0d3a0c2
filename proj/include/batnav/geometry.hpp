#pragma once

#include <algorithm>
#include <cmath>

namespace batnav {

inline constexpr double kPi = 3.14159265358979323846;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
    friend Vec2 operator*(Vec2 v, double s) { return {s * v.x, s * v.y}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;

    double norm() const { return std::hypot(x, y); }
};

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

// Maps any angle to [0, 360).
inline double normalize_deg(double deg) {
    double a = std::fmod(deg, 360.0);
    if (a < 0.0) a += 360.0;
    return a < 360.0 ? a : 0.0;
}

// Unsigned circular distance between two bearings, in [0, 180].
inline double circular_distance_deg(double a, double b) {
    double d = std::fabs(normalize_deg(a) - normalize_deg(b));
    return d <= 180.0 ? d : 360.0 - d;
}

// Bearing of q as seen from p, in [0, 360).
inline double bearing_deg(Vec2 p, Vec2 q) {
    return normalize_deg(rad_to_deg(std::atan2(q.y - p.y, q.x - p.x)));
}

inline Vec2 unit_from_bearing_deg(double deg) {
    double r = deg_to_rad(deg);
    return {std::cos(r), std::sin(r)};
}

// Axis-aligned rectangle, min corner inclusive, max corner inclusive.
struct Rect {
    Vec2 min;
    Vec2 max;

    friend bool operator==(const Rect&, const Rect&) = default;

    bool contains(Vec2 p) const {
        return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
    }

    Vec2 clamp(Vec2 p) const {
        return {std::clamp(p.x, min.x, max.x), std::clamp(p.y, min.y, max.y)};
    }
};

}  // namespace batnav
