#ifndef EVACSIM_PHYSICS_HPP
#define EVACSIM_PHYSICS_HPP

#include <span>
#include <utility>

#include "evacsim/model.hpp"

namespace evacsim {

/// Diagnostics from one resolve_all call.
struct ContactResolution {
    int iterations_used = 0;
    double max_residual_penetration = 0.0;
};

/// Projects two discs out of overlap along their center line, to exact
/// contact, with displacements split by inverse mass so the heavier body
/// yields less. Non-overlapping pairs are returned unchanged; contacts
/// impart no impulse, so separated agents do not repel afterwards.
/// Exactly coincident centers separate along +x.
std::pair<Vec2, Vec2> separate_pair(const Vec2& pos_i, const Vec2& pos_j,
                                    double r_i, double r_j,
                                    double m_i, double m_j);

/// Returns a position at least `radius` away from every wall segment
/// effective for this agent. Openings the agent may use are gaps;
/// openings it may not use count as walls when the environment says so.
/// An agent already within `radius` of an accessible opening is in the
/// doorway and is left alone: the exit check removes it this same step,
/// and clamping it against the adjacent wall ends would wedge it in the
/// door forever.
Vec2 project_from_walls(const Vec2& position, double radius, bool disabled,
                        const Environment& env);

/// Gauss-Seidel position solver. Each sweep visits agent pairs in
/// canonical order (i < j, ascending id) applying separate_pair, then
/// projects every agent from the walls in id order. Sweeps stop early
/// once the worst pairwise penetration is within tolerance.
/// `positions` and `params` are parallel arrays over the active agents.
ContactResolution resolve_all(std::span<Vec2> positions,
                              std::span<const AgentParams> params,
                              const Environment& env,
                              const SimParams& sim);

/// Worst pairwise overlap depth in the given configuration (0 when
/// disjoint). Used for the solver's residual and by invariant checks.
double max_pairwise_penetration(std::span<const Vec2> positions,
                                std::span<const AgentParams> params);

}  // namespace evacsim

#endif  // EVACSIM_PHYSICS_HPP
