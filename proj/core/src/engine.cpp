#include "evacsim/engine.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace evacsim {

bool should_exit(const AgentState& agent, const Environment& env) {
    for (const ExitOpening& exit : env.exits) {
        if (!exit_accessible(exit, agent.params.disabled)) continue;
        if (point_segment_distance(agent.position, exit.segment) < agent.params.radius) {
            return true;
        }
    }
    return false;
}

namespace {

TraceRow count_remaining(int step, const std::vector<AgentState>& agents) {
    TraceRow row;
    row.step = step;
    for (const AgentState& a : agents) {
        if (!a.active()) continue;
        ++row.remaining_total;
        if (a.params.disabled) ++row.remaining_disabled;
        else ++row.remaining_able;
    }
    return row;
}

ContactResolution step_impl(SimState& state, const Scenario& scenario) {
    const SimParams& sim = scenario.sim;
    const Environment& env = scenario.environment;
    const int current = state.step + 1;

    // (1) Posture updates, ascending id, active agents only. An agent
    // that falls now does not move now. The draw for (agent, step) is a
    // pure function of the scenario seed, so conditions sharing a seed
    // share every agent's fall schedule.
    for (AgentState& a : state.agents) {
        if (!a.active()) continue;
        if (!a.params.can_fall) {
            a.posture = Posture::Standing;
            continue;
        }
        const double u = posture_uniform(scenario.seed, a.id, current);
        a.posture = next_posture(a.posture, u, sim.p_fall, sim.p_recover);
    }

    // (2)+(3) Desired velocity and tentative move. Intent depends only on
    // the agent's own position, so compute-and-apply per agent is exact.
    for (AgentState& a : state.agents) {
        if (!a.active() || a.posture != Posture::Standing) continue;
        a.position += desired_velocity(a, env, sim.target_midpoint);
    }

    // (4) Contact and wall resolution over the active agents. Agents are
    // stored in ascending id order, so subset order stays canonical.
    std::vector<std::size_t> active;
    active.reserve(state.agents.size());
    for (std::size_t idx = 0; idx < state.agents.size(); ++idx) {
        if (state.agents[idx].active()) active.push_back(idx);
    }
    std::vector<Vec2> positions(active.size());
    std::vector<AgentParams> params(active.size());
    for (std::size_t k = 0; k < active.size(); ++k) {
        positions[k] = state.agents[active[k]].position;
        params[k] = state.agents[active[k]].params;
    }
    const ContactResolution resolution = resolve_all(positions, params, env, sim);
    for (std::size_t k = 0; k < active.size(); ++k) {
        state.agents[active[k]].position = positions[k];
    }

    // (5) Exit removal, ascending id.
    for (AgentState& a : state.agents) {
        if (!a.active()) continue;
        if (should_exit(a, env)) {
            a.exited_at = current;
            state.trace.exit_times[a.id] = current;
        }
    }

    // (6)+(7) Trace row, then advance the step counter.
    state.trace.rows.push_back(count_remaining(current, state.agents));
    state.step = current;
    return resolution;
}

}  // namespace

void step(SimState& state, const Scenario& scenario) {
    step_impl(state, scenario);
}

Trace run(const Scenario& scenario) {
    return run(scenario, StepObserver{});
}

Trace run(const Scenario& scenario, const StepObserver& observer) {
    const std::vector<std::string> errors = validate_scenario(scenario);
    if (!errors.empty()) {
        std::ostringstream msg;
        msg << "invalid scenario";
        for (const std::string& e : errors) msg << "\n  " << e;
        throw std::invalid_argument(msg.str());
    }

    SimState state{0, scenario.agents, RunRng(scenario.seed, RunRng::Stream::Run), Trace{}};
    state.trace.label = scenario.label;
    state.trace.seed = scenario.seed;

    if (scenario.sim.randomize_speeds) {
        for (AgentState& a : state.agents) {
            a.params.speed_multiplier = draw_speed_multiplier(state.rng);
        }
    }

    state.trace.rows.push_back(count_remaining(0, state.agents));

    while (state.trace.rows.back().remaining_total > 0 &&
           state.step < scenario.sim.max_steps) {
        const ContactResolution resolution = step_impl(state, scenario);
        if (observer) observer(state, resolution);
    }

    state.trace.terminated_by = state.trace.rows.back().remaining_total == 0
                                    ? Termination::Evacuated
                                    : Termination::StepLimit;
    return std::move(state.trace);
}

std::optional<int> evacuation_time(const Trace& trace) {
    if (trace.terminated_by == Termination::StepLimit) return std::nullopt;
    for (const TraceRow& row : trace.rows) {
        if (row.remaining_total == 0) return row.step;
    }
    return std::nullopt;
}

}  // namespace evacsim
