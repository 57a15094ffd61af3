#ifndef EVACSIM_BEHAVIOR_HPP
#define EVACSIM_BEHAVIOR_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "evacsim/model.hpp"

namespace evacsim {

/// Deterministic per-run random source. Two independent streams are
/// derived from the scenario seed by fixed labels: Construction feeds
/// scenario building (random seating placement), Run feeds the
/// simulation loop (speed multipliers, posture draws). The same seed
/// therefore yields the same layout across falling and non-falling
/// variants, which is what makes paired-seed comparisons meaningful.
///
/// The generator is mt19937_64; uniforms take the top 53 bits of one
/// 64-bit output. Determinism is per-build, not cross-implementation.
class RunRng {
  public:
    enum class Stream : std::uint64_t { Construction = 1, Run = 2 };

    RunRng(std::uint64_t seed, Stream stream);

    /// One uniform draw in [0, 1). Counts as one draw.
    double next_uniform();

    std::uint64_t next_u64();

    /// Uniform integer in [0, n). Requires n > 0.
    std::uint64_t next_below(std::uint64_t n);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t draw_count() const { return draws_; }

  private:
    std::mt19937_64 gen_;
    std::uint64_t seed_ = 0;
    std::uint64_t draws_ = 0;
};

/// Index of the accessible exit whose opening is nearest to the agent
/// (point-to-segment distance), ties broken by lowest exit index.
/// Assignment happens once at t=0; agents never change exits afterwards.
/// Requires at least one accessible exit (enforced by validate_scenario).
int assign_exit(const Vec2& position, bool disabled, const std::vector<ExitOpening>& exits);

/// Movement intent for one step. Fallen agents do not move. Standing
/// agents head for the closest point on their assigned opening (or its
/// midpoint when target_midpoint is set), at base_speed * multiplier.
Vec2 desired_velocity(const AgentState& agent, const Environment& env, bool target_midpoint);

/// Posture transition given one uniform draw u: standing agents fall
/// iff u < p_fall, fallen agents get back up iff u < p_recover.
Posture next_posture(Posture posture, double u, double p_fall, double p_recover);

/// Consumes exactly one draw when can_fall is true, zero otherwise.
/// Draw alignment is part of the determinism contract: one draw per
/// fall-capable active agent per step, in ascending id order.
Posture step_posture(Posture posture, bool can_fall, RunRng& rng, double p_fall, double p_recover);

/// The uniform driving agent `agent_id`'s posture transition at `step`,
/// as a pure function of (seed, agent, step). Indexing draws by agent
/// and step instead of pulling them off one sequential stream keeps an
/// agent's fall schedule identical across conditions run with the same
/// seed (common random numbers): paired runs then differ only through
/// the condition itself, never through reshuffled fall luck.
double posture_uniform(std::uint64_t seed, int agent_id, int step);

/// Maps a uniform u in [0,1) to the +/-5% speed band [0.95, 1.05).
double speed_multiplier_from_uniform(double u);

double draw_speed_multiplier(RunRng& rng);

}  // namespace evacsim

#endif  // EVACSIM_BEHAVIOR_HPP
