#ifndef EVACSIM_MODEL_HPP
#define EVACSIM_MODEL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evacsim/geom.hpp"

namespace evacsim {

enum class Posture { Standing, Fallen };

enum class ExitAccess { All, DisabledOnly, AbleOnly };

enum class Termination { Evacuated, StepLimit };

/// Preset base speed, shared by both groups. Calibrated so the six-exit
/// experiments complete in the 60-120 step range; see the README's
/// parameter notes.
inline constexpr double kDefaultBaseSpeed = 0.92;

/// Body and movement parameters of one agent. Able-bodied agents default
/// to radius 1 / mass 1; agents with disabilities get a larger radius and
/// more mass (assisted walking devices take up space, and heavier bodies
/// displace neighbours less in the contact solver).
struct AgentParams {
    double radius = 1.0;
    double mass = 1.0;
    double base_speed = 1.0;
    double speed_multiplier = 1.0;  // per-agent jitter, in [0.95, 1.05]
    bool disabled = false;
    bool can_fall = false;
};

AgentParams default_able_body();
AgentParams default_disabled_body();

struct AgentState {
    int id = 0;
    Vec2 position;
    AgentParams params;
    Posture posture = Posture::Standing;
    int assigned_exit = -1;  // fixed at initialization, never recomputed
    std::optional<int> exited_at;

    bool active() const { return !exited_at.has_value(); }
};

/// A gap in the room boundary. Openings inaccessible to an agent behave
/// as walls for that agent.
struct ExitOpening {
    int id = 0;
    Segment segment;
    ExitAccess access = ExitAccess::All;
};

bool exit_accessible(const ExitOpening& exit, bool disabled);

struct Environment {
    double width = 100.0;
    double height = 100.0;
    std::vector<ExitOpening> exits;
    std::vector<Segment> wall_segments;  // boundary minus openings, precomputed
    // When true (default), openings an agent may not use are solid walls for
    // that agent; when false they are plain gaps that the agent still never
    // exits through.
    bool restricted_openings_solid = true;
};

struct SimParams {
    double p_fall = 0.001;    // chance per step of a standing agent falling
    double p_recover = 0.01;  // chance per step of a fallen agent getting up
    int max_steps = 10000;
    // Sweep budget for the contact solver. Corner-door pileups need on
    // the order of a hundred sweeps to relax below tolerance; the
    // residual early-exit keeps uncongested steps at one or two sweeps,
    // so the budget only costs time where it is needed.
    int solver_iterations = 128;
    double penetration_tolerance = 0.01;
    bool target_midpoint = false;  // aim at the opening midpoint instead of the closest point
    // Test hook, not part of the scenario file format: when false, the run
    // consumes no speed-multiplier draws and agents keep their configured
    // multipliers.
    bool randomize_speeds = true;
};

struct Scenario {
    Environment environment;
    std::vector<AgentState> agents;
    SimParams sim;
    std::uint64_t seed = 0;
    std::string label;
};

struct TraceRow {
    int step = 0;
    int remaining_total = 0;
    int remaining_disabled = 0;
    int remaining_able = 0;
};

/// Per-run record: remaining counts per step plus per-agent exit times.
struct Trace {
    std::string label;
    std::uint64_t seed = 0;
    std::vector<TraceRow> rows;          // row 0 is the initial population
    std::map<int, int> exit_times;       // agent id -> step of removal
    Termination terminated_by = Termination::Evacuated;
};

/// Checks every scenario invariant and returns all violations instead of
/// aborting on the first: overlapping initial agents, agents with no
/// accessible exit, malformed boundary tiling, out-of-range parameters.
/// An empty result means the scenario is runnable.
std::vector<std::string> validate_scenario(const Scenario& scenario);

}  // namespace evacsim

#endif  // EVACSIM_MODEL_HPP
