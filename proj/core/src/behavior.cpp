#include "evacsim/behavior.hpp"

#include <cassert>
#include <limits>

namespace evacsim {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace

RunRng::RunRng(std::uint64_t seed, Stream stream)
    : gen_(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(stream)))),
      seed_(seed) {}

double RunRng::next_uniform() {
    ++draws_;
    // Top 53 bits -> dyadic rational in [0, 1).
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

std::uint64_t RunRng::next_u64() {
    ++draws_;
    return gen_();
}

std::uint64_t RunRng::next_below(std::uint64_t n) {
    assert(n > 0);
    return next_u64() % n;
}

int assign_exit(const Vec2& position, bool disabled, const std::vector<ExitOpening>& exits) {
    int best = -1;
    double best_distance = std::numeric_limits<double>::infinity();
    for (const ExitOpening& exit : exits) {
        if (!exit_accessible(exit, disabled)) continue;
        const double d = point_segment_distance(position, exit.segment);
        if (d < best_distance) {  // ties keep the lowest index
            best_distance = d;
            best = exit.id;
        }
    }
    assert(best >= 0 && "validate_scenario guarantees an accessible exit");
    return best;
}

Vec2 desired_velocity(const AgentState& agent, const Environment& env, bool target_midpoint) {
    if (agent.posture == Posture::Fallen) return {0.0, 0.0};
    const Segment& opening = env.exits[agent.assigned_exit].segment;
    const Vec2 target = target_midpoint
                            ? 0.5 * (opening.a + opening.b)
                            : project_point_on_segment(agent.position, opening).closest;
    const double speed = agent.params.base_speed * agent.params.speed_multiplier;
    return normalize(target - agent.position) * speed;
}

Posture next_posture(Posture posture, double u, double p_fall, double p_recover) {
    if (posture == Posture::Standing) {
        return u < p_fall ? Posture::Fallen : Posture::Standing;
    }
    return u < p_recover ? Posture::Standing : Posture::Fallen;
}

Posture step_posture(Posture posture, bool can_fall, RunRng& rng,
                     double p_fall, double p_recover) {
    if (!can_fall) return Posture::Standing;
    return next_posture(posture, rng.next_uniform(), p_fall, p_recover);
}

double posture_uniform(std::uint64_t seed, int agent_id, int step) {
    std::uint64_t x = splitmix64(seed ^ 0xF0A11DEull);
    x = splitmix64(x ^ static_cast<std::uint64_t>(agent_id));
    x = splitmix64(x ^ static_cast<std::uint64_t>(step));
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

double speed_multiplier_from_uniform(double u) {
    return 0.95 + 0.1 * u;
}

double draw_speed_multiplier(RunRng& rng) {
    return speed_multiplier_from_uniform(rng.next_uniform());
}

}  // namespace evacsim
