#ifndef EVACSIM_ENGINE_HPP
#define EVACSIM_ENGINE_HPP

#include <functional>
#include <optional>

#include "evacsim/behavior.hpp"
#include "evacsim/model.hpp"
#include "evacsim/physics.hpp"

namespace evacsim {

/// Mutable state of one run. Agents whose exited_at is set are inert:
/// excluded from physics, behavior, counting and RNG draws.
struct SimState {
    int step = 0;
    std::vector<AgentState> agents;
    RunRng rng;
    Trace trace;
};

/// True iff the agent's center is closer than its radius to any exit
/// opening it may use.
bool should_exit(const AgentState& agent, const Environment& env);

/// Advances one step in fixed order: (1) posture draws in ascending id,
/// (2) desired velocities for standing agents, (3) tentative moves,
/// (4) contact and wall resolution, (5) exit removal in ascending id,
/// (6) trace row, (7) step counter. An agent that falls this step does
/// not move this step.
void step(SimState& state, const Scenario& scenario);

/// Called after every completed step with the state and the solver
/// diagnostics for that step.
using StepObserver = std::function<void(const SimState&, const ContactResolution&)>;

/// Runs a validated scenario to completion: seeds the run stream, draws
/// per-agent speed multipliers in ascending id order, then steps until
/// everyone is out or max_steps is hit. Throws std::invalid_argument if
/// the scenario fails validation.
Trace run(const Scenario& scenario);
Trace run(const Scenario& scenario, const StepObserver& observer);

/// Step at which remaining_total first reached zero; nullopt for runs
/// stopped by the step limit.
std::optional<int> evacuation_time(const Trace& trace);

}  // namespace evacsim

#endif  // EVACSIM_ENGINE_HPP
