#ifndef EVACSIM_GEOM_HPP
#define EVACSIM_GEOM_HPP

#include <cmath>

namespace evacsim {

/// Planar vector in room units.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    constexpr Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
    constexpr Vec2& operator*=(double s) { x *= s; y *= s; return *this; }

    friend constexpr Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
    friend constexpr Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
    friend constexpr Vec2 operator*(Vec2 a, double s) { return a *= s; }
    friend constexpr Vec2 operator*(double s, Vec2 a) { return a *= s; }
    friend constexpr bool operator==(const Vec2& a, const Vec2& b) {
        return a.x == b.x && a.y == b.y;
    }
};

constexpr double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
constexpr double norm_squared(const Vec2& v) { return dot(v, v); }
inline double norm(const Vec2& v) { return std::sqrt(norm_squared(v)); }

inline bool is_finite(const Vec2& v) { return std::isfinite(v.x) && std::isfinite(v.y); }

/// Unit vector in the direction of v. The zero vector maps to the zero
/// vector, so an agent standing exactly on its target produces zero
/// desired velocity instead of a fault.
inline Vec2 normalize(const Vec2& v) {
    const double n = norm(v);
    if (n == 0.0) return {0.0, 0.0};
    return {v.x / n, v.y / n};
}

/// Line segment between two endpoints. Walls and exit openings are
/// segments on the room boundary; the scenario builders reject
/// degenerate ones at construction.
struct Segment {
    Vec2 a;
    Vec2 b;

    double length() const { return norm(b - a); }
};

struct SegmentProjection {
    Vec2 closest;
    double distance = 0.0;
};

/// Closest point on s to p, with the Euclidean distance. The foot of the
/// perpendicular is clamped to the segment endpoints.
inline SegmentProjection project_point_on_segment(const Vec2& p, const Segment& s) {
    const Vec2 ab = s.b - s.a;
    const double len2 = norm_squared(ab);
    double t = 0.0;
    if (len2 > 0.0) {
        t = dot(p - s.a, ab) / len2;
        if (t < 0.0) t = 0.0;
        if (t > 1.0) t = 1.0;
    }
    const Vec2 closest = s.a + t * ab;
    return {closest, norm(p - closest)};
}

inline double point_segment_distance(const Vec2& p, const Segment& s) {
    return project_point_on_segment(p, s).distance;
}

}  // namespace evacsim

#endif  // EVACSIM_GEOM_HPP
