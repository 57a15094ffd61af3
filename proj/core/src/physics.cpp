#include "evacsim/physics.hpp"

#include <algorithm>
#include <cmath>

namespace evacsim {

std::pair<Vec2, Vec2> separate_pair(const Vec2& pos_i, const Vec2& pos_j,
                                    double r_i, double r_j,
                                    double m_i, double m_j) {
    const Vec2 d = pos_j - pos_i;
    const double contact = r_i + r_j;
    const double dist2 = norm_squared(d);
    if (dist2 >= contact * contact) return {pos_i, pos_j};

    const double dist = std::sqrt(dist2);
    // Coincident centers have no center line; separate along +x.
    const Vec2 n = dist > 0.0 ? Vec2{d.x / dist, d.y / dist} : Vec2{1.0, 0.0};
    const double overlap = contact - dist;
    const double mass_sum = m_i + m_j;
    const double share_i = m_j / mass_sum;  // = (1/m_i) / (1/m_i + 1/m_j)
    const double share_j = m_i / mass_sum;
    return {pos_i - n * (overlap * share_i), pos_j + n * (overlap * share_j)};
}

namespace {

constexpr double kDegenerate = 1e-12;

// Normal of a boundary segment pointing into the room.
Vec2 inward_normal(const Segment& seg, const Environment& env) {
    const Vec2 dir = normalize(seg.b - seg.a);
    Vec2 n{-dir.y, dir.x};
    const Vec2 center{env.width * 0.5, env.height * 0.5};
    if (dot(n, center - seg.a) < 0.0) n = {-n.x, -n.y};
    return n;
}

// Push the center to clearance `radius` from one segment. Centers that
// slipped past the boundary line are pushed back inward, not outward.
Vec2 push_out(const Vec2& p, double radius, const Segment& seg, const Environment& env) {
    const SegmentProjection proj = project_point_on_segment(p, seg);
    if (proj.distance >= radius) return p;
    const Vec2 inward = inward_normal(seg, env);
    Vec2 dir;
    if (proj.distance > kDegenerate) {
        dir = {(p.x - proj.closest.x) / proj.distance, (p.y - proj.closest.y) / proj.distance};
        if (dot(dir, inward) < 0.0) dir = inward;
    } else {
        dir = inward;
    }
    return proj.closest + dir * radius;
}

bool in_accessible_doorway(const Vec2& p, double radius, bool disabled,
                           const Environment& env) {
    for (const ExitOpening& exit : env.exits) {
        if (!exit_accessible(exit, disabled)) continue;
        if (point_segment_distance(p, exit.segment) < radius) return true;
    }
    return false;
}

}  // namespace

Vec2 project_from_walls(const Vec2& position, double radius, bool disabled,
                        const Environment& env) {
    // Doorway passage: the exit check removes this agent in the same
    // step, so the wall ends flanking the opening must not clamp it.
    if (in_accessible_doorway(position, radius, disabled, env)) return position;

    Vec2 p = position;
    // Room walls are axis-aligned, so pushes from distinct segments are
    // orthogonal or collinear; a few passes reach a fixed point.
    for (int pass = 0; pass < 8; ++pass) {
        bool moved = false;
        auto apply = [&](const Segment& seg) {
            const Vec2 next = push_out(p, radius, seg, env);
            if (!(next == p)) {
                p = next;
                moved = true;
            }
        };
        for (const Segment& wall : env.wall_segments) apply(wall);
        if (env.restricted_openings_solid) {
            for (const ExitOpening& exit : env.exits) {
                if (!exit_accessible(exit, disabled)) apply(exit.segment);
            }
        }
        if (!moved) break;
    }
    return p;
}

double max_pairwise_penetration(std::span<const Vec2> positions,
                                std::span<const AgentParams> params) {
    const std::size_t n = positions.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double contact = params[i].radius + params[j].radius;
            const double dx = positions[j].x - positions[i].x;
            if (dx >= contact || dx <= -contact) continue;
            const double dy = positions[j].y - positions[i].y;
            const double dist2 = dx * dx + dy * dy;
            if (dist2 >= contact * contact) continue;
            worst = std::max(worst, contact - std::sqrt(dist2));
        }
    }
    return worst;
}

ContactResolution resolve_all(std::span<Vec2> positions,
                              std::span<const AgentParams> params,
                              const Environment& env,
                              const SimParams& sim) {
    const std::size_t n = positions.size();
    ContactResolution result;
    for (int sweep = 1; sweep <= sim.solver_iterations; ++sweep) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double contact = params[i].radius + params[j].radius;
                const double dx = positions[j].x - positions[i].x;
                if (dx >= contact || dx <= -contact) continue;
                const double dy = positions[j].y - positions[i].y;
                if (dx * dx + dy * dy >= contact * contact) continue;
                auto [pi, pj] = separate_pair(positions[i], positions[j],
                                              params[i].radius, params[j].radius,
                                              params[i].mass, params[j].mass);
                positions[i] = pi;
                positions[j] = pj;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            positions[i] = project_from_walls(positions[i], params[i].radius,
                                              params[i].disabled, env);
        }
        result.iterations_used = sweep;
        result.max_residual_penetration = max_pairwise_penetration(positions, params);
        if (result.max_residual_penetration <= sim.penetration_tolerance) break;
    }
    return result;
}

}  // namespace evacsim
