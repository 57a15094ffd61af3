#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "evacsim/engine.hpp"
#include "evacsim/scenarios.hpp"

using namespace evacsim;

namespace {

// One able-bodied agent, no jitter, no falling: pure kinematics.
Scenario single_agent_at(Vec2 position) {
    Scenario s;
    s.environment = build_environment({ExitLayout::FourCorners, ExitRestriction::Unrestricted});
    s.sim.randomize_speeds = false;
    s.seed = 9;
    s.label = "single";
    AgentState agent;
    agent.id = 0;
    agent.position = position;
    agent.params = default_able_body();
    agent.params.base_speed = 1.0;  // unit speed keeps the arithmetic closed-form
    agent.assigned_exit = assign_exit(position, false, s.environment.exits);
    s.agents.push_back(agent);
    return s;
}

bool rows_conserved(const Trace& trace, int population) {
    for (const TraceRow& row : trace.rows) {
        const int exited = static_cast<int>(std::count_if(
            trace.exit_times.begin(), trace.exit_times.end(),
            [&](const auto& kv) { return kv.second <= row.step; }));
        if (row.remaining_total + exited != population) return false;
        if (row.remaining_disabled + row.remaining_able != row.remaining_total) return false;
    }
    return true;
}

bool rows_monotone(const Trace& trace) {
    for (std::size_t i = 1; i < trace.rows.size(); ++i) {
        if (trace.rows[i].remaining_total > trace.rows[i - 1].remaining_total) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("should_exit: strict radius threshold against accessible openings") {
    const Environment env =
        build_environment({ExitLayout::FourCorners, ExitRestriction::Unrestricted});
    AgentState agent;
    agent.params = default_able_body();

    agent.position = {3.0, 0.9};
    CHECK(should_exit(agent, env));
    agent.position = {3.0, 1.2};
    CHECK(!should_exit(agent, env));

    // Inaccessible opening next door does not count.
    const Environment split =
        build_environment({ExitLayout::FourCorners, ExitRestriction::SplitAccess});
    agent.position = {3.0, 0.9};
    CHECK(!should_exit(agent, split));  // bottom openings are disabled-only
    agent.position = {3.0, 99.1};
    CHECK(should_exit(agent, split));
}

TEST_CASE("single agent walks a straight line and leaves at step 13") {
    const Scenario s = single_agent_at({12, 12});
    const Trace trace = run(s);

    // Straight-line distance to the opening edge is sqrt(180) ~ 13.42;
    // removal triggers once the remaining distance drops below the radius.
    CHECK(trace.terminated_by == Termination::Evacuated);
    CHECK(evacuation_time(trace) == 13);
    REQUIRE(trace.exit_times.count(0) == 1);
    CHECK(trace.exit_times.at(0) == 13);
    CHECK(trace.rows.size() == 14);
    CHECK(trace.rows.front().remaining_total == 1);
    CHECK(trace.rows.back().remaining_total == 0);
}

TEST_CASE("two far-apart agents behave like two independent runs") {
    Scenario both = single_agent_at({12, 12});
    AgentState second;
    second.id = 1;
    second.position = {88, 88};
    second.params = default_able_body();
    second.params.base_speed = 1.0;
    second.assigned_exit = assign_exit(second.position, false, both.environment.exits);
    both.agents.push_back(second);

    const Trace trace_both = run(both);
    const Trace trace_a = run(single_agent_at({12, 12}));
    const Trace trace_b = run(single_agent_at({88, 88}));

    CHECK(trace_both.exit_times.at(0) == trace_a.exit_times.at(0));
    CHECK(trace_both.exit_times.at(1) == trace_b.exit_times.at(0));
}

TEST_CASE("zero-agent scenario yields a single empty row") {
    Scenario s;
    s.environment = build_environment({ExitLayout::FourCorners, ExitRestriction::Unrestricted});
    s.label = "empty";
    const Trace trace = run(s);
    REQUIRE(trace.rows.size() == 1);
    CHECK(trace.rows[0].step == 0);
    CHECK(trace.rows[0].remaining_total == 0);
    CHECK(trace.terminated_by == Termination::Evacuated);
    CHECK(evacuation_time(trace) == 0);
}

TEST_CASE("step: zero active agents appends a row and consumes no draws") {
    Scenario s;
    s.environment = build_environment({ExitLayout::FourCorners, ExitRestriction::Unrestricted});
    SimState state{0, {}, RunRng(1, RunRng::Stream::Run), Trace{}};
    step(state, s);
    REQUIRE(state.trace.rows.size() == 1);
    CHECK(state.trace.rows[0].remaining_total == 0);
    CHECK(state.rng.draw_count() == 0);
    CHECK(state.step == 1);
}

TEST_CASE("same scenario and seed reproduce the trace bit-for-bit") {
    const Scenario s = preset("falling_random", 17);
    const Trace a = run(s);
    const Trace b = run(s);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].remaining_total == b.rows[i].remaining_total);
        CHECK(a.rows[i].remaining_disabled == b.rows[i].remaining_disabled);
    }
    CHECK(a.exit_times == b.exit_times);
    CHECK(a.terminated_by == b.terminated_by);
}

TEST_CASE("control run: conservation, monotonicity, group split") {
    const Scenario s = preset("control", 1);
    const Trace trace = run(s);
    CHECK(rows_conserved(trace, 400));
    CHECK(rows_monotone(trace));
    CHECK(trace.rows[0].remaining_total == 400);
    CHECK(trace.rows[0].remaining_disabled == 0);
}

TEST_CASE("RNG stream alignment: p_fall is irrelevant while can_fall is off") {
    Scenario a = preset("placement_middle", 5);
    Scenario b = a;
    b.sim.p_fall = 0.0;
    const Trace ta = run(a);
    const Trace tb = run(b);
    REQUIRE(ta.rows.size() == tb.rows.size());
    CHECK(ta.exit_times == tb.exit_times);
}

TEST_CASE("fall schedules are shared across conditions with the same seed") {
    // With one seed, agent k's posture draw at step t is the same number
    // in every condition, so paired runs differ only through the
    // condition itself. Record postures through the observer and compare
    // the overlap window during which the agent is active in both runs.
    const int watched = 250;
    auto record = [&](const Scenario& s) {
        std::vector<Posture> seq;
        run(s, [&](const SimState& state, const ContactResolution&) {
            if (state.agents[watched].active()) {
                seq.push_back(state.agents[watched].posture);
            }
        });
        return seq;
    };

    const std::vector<Posture> front = record(preset("falling_front", 6));
    const std::vector<Posture> random = record(preset("falling_random", 6));
    const std::size_t overlap = std::min(front.size(), random.size());
    REQUIRE(overlap > 0);
    for (std::size_t i = 0; i < overlap; ++i) {
        CHECK(front[i] == random[i]);
    }
}

TEST_CASE("fallen agents stay put on their own but can be shoved") {
    // A walker marching straight through a fallen agent's spot must
    // displace it; the fallen agent itself never initiates movement.
    Scenario s = single_agent_at({50, 30});
    AgentState fallen;
    fallen.id = 1;
    fallen.position = {47, 28};  // directly on the walker's line to its opening
    fallen.params = default_able_body();
    fallen.params.base_speed = 1.0;
    fallen.params.can_fall = true;
    fallen.posture = Posture::Fallen;
    fallen.assigned_exit = assign_exit(fallen.position, false, s.environment.exits);
    s.agents.push_back(fallen);
    s.sim.max_steps = 8;
    s.sim.p_fall = 0.0;
    s.sim.p_recover = 0.0;  // pinned down for the whole run

    // The walker's path to the bottom-left opening passes through the
    // fallen body's spot; contact must displace it.
    Vec2 fallen_pos = fallen.position;
    bool shoved = false;
    run(s, [&](const SimState& state, const ContactResolution&) {
        const AgentState& b = state.agents[1];
        if (!(b.position == fallen_pos)) shoved = true;
        CHECK(b.posture == Posture::Fallen);
        fallen_pos = b.position;
    });
    CHECK(shoved);
}

TEST_CASE("exited agents are inert: positions frozen after removal") {
    const Scenario s = preset("falling_front", 4);
    std::map<int, Vec2> frozen;
    bool moved_after_exit = false;
    run(s, [&](const SimState& state, const ContactResolution&) {
        for (const AgentState& a : state.agents) {
            if (a.active()) continue;
            auto [it, inserted] = frozen.try_emplace(a.id, a.position);
            if (!inserted && !(it->second == a.position)) moved_after_exit = true;
        }
    });
    CHECK(!moved_after_exit);
    CHECK(frozen.size() == 400);
}

TEST_CASE("evacuation_time: step-limited traces have none") {
    Scenario s = single_agent_at({12, 12});
    s.sim.max_steps = 5;
    const Trace trace = run(s);
    CHECK(trace.terminated_by == Termination::StepLimit);
    CHECK(!evacuation_time(trace).has_value());
    CHECK(trace.rows.size() == 6);
}

TEST_CASE("run rejects invalid scenarios") {
    Scenario s = single_agent_at({12, 12});
    AgentState dup = s.agents[0];
    dup.id = 1;
    s.agents.push_back(dup);  // exact overlap
    CHECK_THROWS_AS(run(s), std::invalid_argument);
}
