#include "evacsim/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "evacsim/geom.hpp"

namespace evacsim {

AgentParams default_able_body() {
    AgentParams p;
    p.radius = 1.0;
    p.mass = 1.0;
    p.base_speed = kDefaultBaseSpeed;
    p.disabled = false;
    return p;
}

AgentParams default_disabled_body() {
    AgentParams p;
    p.radius = 1.5;
    p.mass = 2.5;
    p.base_speed = kDefaultBaseSpeed;
    p.disabled = true;
    return p;
}

bool exit_accessible(const ExitOpening& exit, bool disabled) {
    switch (exit.access) {
        case ExitAccess::All: return true;
        case ExitAccess::DisabledOnly: return disabled;
        case ExitAccess::AbleOnly: return !disabled;
    }
    return false;
}

namespace {

constexpr double kTilingTolerance = 1e-9;

bool on_boundary(const Vec2& p, double w, double h) {
    const bool on_vertical = (p.x == 0.0 || p.x == w) && p.y >= 0.0 && p.y <= h;
    const bool on_horizontal = (p.y == 0.0 || p.y == h) && p.x >= 0.0 && p.x <= w;
    return on_vertical || on_horizontal;
}

// Inaccessible openings act as walls, so wall clearance is per-group.
double clearance_to_effective_walls(const Vec2& p, bool disabled, const Environment& env) {
    double best = std::numeric_limits<double>::infinity();
    for (const Segment& wall : env.wall_segments) {
        best = std::min(best, point_segment_distance(p, wall));
    }
    if (env.restricted_openings_solid) {
        for (const ExitOpening& exit : env.exits) {
            if (!exit_accessible(exit, disabled)) {
                best = std::min(best, point_segment_distance(p, exit.segment));
            }
        }
    }
    return best;
}

}  // namespace

std::vector<std::string> validate_scenario(const Scenario& scenario) {
    std::vector<std::string> errors;
    const Environment& env = scenario.environment;
    auto fail = [&errors](const std::string& msg) { errors.push_back(msg); };

    if (!(env.width > 0.0) || !(env.height > 0.0) ||
        !std::isfinite(env.width) || !std::isfinite(env.height)) {
        fail("environment: room dimensions must be positive and finite");
        return errors;  // everything else depends on a sane room
    }

    // Boundary tiling: walls plus openings must cover the rectangle
    // boundary exactly, and every piece must lie on it.
    double tiled = 0.0;
    for (const Segment& wall : env.wall_segments) {
        if (wall.length() <= 0.0) fail("environment: degenerate wall segment");
        if (!on_boundary(wall.a, env.width, env.height) ||
            !on_boundary(wall.b, env.width, env.height)) {
            fail("environment: wall segment off the room boundary");
        }
        tiled += wall.length();
    }
    for (const ExitOpening& exit : env.exits) {
        if (exit.segment.length() <= 0.0) fail("environment: degenerate exit opening");
        if (!on_boundary(exit.segment.a, env.width, env.height) ||
            !on_boundary(exit.segment.b, env.width, env.height)) {
            fail("environment: exit opening off the room boundary");
        }
        tiled += exit.segment.length();
    }
    const double perimeter = 2.0 * (env.width + env.height);
    if (std::abs(tiled - perimeter) > kTilingTolerance) {
        std::ostringstream msg;
        msg << "environment: boundary tiling mismatch (covered " << tiled
            << " of " << perimeter << ")";
        fail(msg.str());
    }

    const SimParams& sim = scenario.sim;
    if (!(sim.p_fall >= 0.0 && sim.p_fall <= 1.0)) fail("sim: p_fall outside [0,1]");
    if (!(sim.p_recover >= 0.0 && sim.p_recover <= 1.0)) fail("sim: p_recover outside [0,1]");
    if (sim.max_steps < 1) fail("sim: max_steps must be >= 1");
    if (sim.solver_iterations < 1) fail("sim: solver_iterations must be >= 1");
    if (!(sim.penetration_tolerance >= 0.0)) fail("sim: penetration_tolerance must be >= 0");

    for (std::size_t idx = 0; idx < scenario.agents.size(); ++idx) {
        const AgentState& agent = scenario.agents[idx];
        if (agent.id != static_cast<int>(idx)) {
            fail("agents: ids must be the ordinal indices 0..n-1, in order");
            break;
        }
    }

    for (const AgentState& agent : scenario.agents) {
        std::ostringstream who;
        who << "agent " << agent.id;
        const AgentParams& p = agent.params;
        if (!(p.radius > 0.0)) fail(who.str() + ": radius must be > 0");
        if (!(p.mass > 0.0)) fail(who.str() + ": mass must be > 0");
        if (!(p.base_speed >= 0.0)) fail(who.str() + ": base_speed must be >= 0");
        if (!(p.speed_multiplier >= 0.95 && p.speed_multiplier <= 1.05)) {
            fail(who.str() + ": speed_multiplier outside [0.95, 1.05]");
        }
        if (!is_finite(agent.position)) {
            fail(who.str() + ": non-finite position");
            continue;
        }

        bool any_accessible = false;
        for (const ExitOpening& exit : env.exits) {
            if (exit_accessible(exit, p.disabled)) any_accessible = true;
        }
        if (!any_accessible) fail(who.str() + ": no accessible exit");

        if (agent.assigned_exit < 0 ||
            agent.assigned_exit >= static_cast<int>(env.exits.size())) {
            fail(who.str() + ": assigned exit out of range");
        } else if (!exit_accessible(env.exits[agent.assigned_exit], p.disabled)) {
            fail(who.str() + ": assigned exit not accessible");
        }

        if (agent.position.x < 0.0 || agent.position.x > env.width ||
            agent.position.y < 0.0 || agent.position.y > env.height) {
            fail(who.str() + ": initial position outside the room");
        } else if (clearance_to_effective_walls(agent.position, p.disabled, env) <
                   p.radius - 1e-9) {
            fail(who.str() + ": initial position not wall-clear");
        }
    }

    // Pairwise initial overlap.
    for (std::size_t i = 0; i < scenario.agents.size(); ++i) {
        for (std::size_t j = i + 1; j < scenario.agents.size(); ++j) {
            const AgentState& a = scenario.agents[i];
            const AgentState& b = scenario.agents[j];
            const double min_gap = a.params.radius + b.params.radius;
            if (norm(a.position - b.position) < min_gap - 1e-9) {
                std::ostringstream msg;
                msg << "initial overlap: agents " << a.id << " and " << b.id;
                fail(msg.str());
            }
        }
    }

    return errors;
}

}  // namespace evacsim
