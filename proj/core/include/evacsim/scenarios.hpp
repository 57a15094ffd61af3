#ifndef EVACSIM_SCENARIOS_HPP
#define EVACSIM_SCENARIOS_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "evacsim/behavior.hpp"
#include "evacsim/model.hpp"

namespace evacsim {

enum class Placement { None, Front, Middle, Random };

enum class ExitLayout { FourCorners, SixExits };

enum class ExitRestriction { Unrestricted, SplitAccess };

struct LayoutPolicy {
    ExitLayout exits = ExitLayout::FourCorners;
    ExitRestriction restriction = ExitRestriction::Unrestricted;
};

/// First n cells of the 20x20 seating grid in the 100x100 room:
/// cell i -> (12 + 4*(i % 20), 12 + 4*(i / 20)). Row 0 (smallest y) is
/// the front, nearest the bottom-wall exits. Requires 1 <= n <= 400.
std::vector<Vec2> grid_positions(int n);

/// Room with exits in the four corners (openings of width 6 on the
/// bottom and top walls; ids 0=BL, 1=BR, 2=TL, 3=TR) and, for SixExits,
/// two more centered on the side walls (4=left, 5=right). SplitAccess
/// restricts the top pair to able-bodied agents and the bottom pair to
/// agents with disabilities; it requires the four-corner layout.
Environment build_environment(const LayoutPolicy& layout,
                              double width = 100.0, double height = 100.0);

/// Grid indices marked disabled under a placement policy. Front takes
/// the lowest rows, Middle the rows centered on rows 9-10, Random a
/// partial shuffle on the construction RNG stream. Front/Middle require
/// n_disabled to fill whole rows.
std::set<int> apply_placement(Placement policy, int n_total, int n_disabled, RunRng& rng);

/// Construction recipe for a scenario; mirrors the scenario file format.
struct BodyConfig {
    double radius = 1.0;
    double mass = 1.0;
};

struct ScenarioConfig {
    std::string label = "scenario";
    std::uint64_t seed = 0;
    double room_width = 100.0;
    double room_height = 100.0;
    ExitLayout exits = ExitLayout::FourCorners;
    ExitRestriction restriction = ExitRestriction::Unrestricted;
    bool restricted_openings_solid = true;
    int n_total = 400;
    int n_disabled = 0;
    Placement placement = Placement::None;
    BodyConfig able{1.0, 1.0};
    BodyConfig disabled{1.5, 2.5};
    double base_speed = kDefaultBaseSpeed;
    bool can_fall = false;
    SimParams sim;
};

/// Builds and fully initializes a scenario from a recipe: grid
/// positions, disabled placement (construction RNG stream), exit
/// assignment. Throws std::invalid_argument on malformed recipes.
Scenario build_scenario(const ScenarioConfig& config);

/// The experiment presets. Placement variants use 360 able + 40
/// disabled agents; extra_exits_* switch to the six-exit room;
/// falling_* enable the fall process; restricted_split runs the front
/// placement with split exit access.
///
///   control,
///   placement_front, placement_middle, placement_random,
///   extra_exits_front, extra_exits_middle, extra_exits_random,
///   falling_front, falling_middle, falling_random,
///   restricted_split
ScenarioConfig preset_config(const std::string& name, std::uint64_t seed);
Scenario preset(const std::string& name, std::uint64_t seed);
const std::vector<std::string>& preset_names();

struct RunRecord {
    std::uint64_t seed = 0;
    std::optional<int> evac_time;           // empty for step-limited runs
    std::optional<int> last_disabled_exit;  // last exit step in the group
    std::optional<int> last_able_exit;
    Termination terminated_by = Termination::Evacuated;
};

/// Per-condition result of replicated runs. Aggregates cover evacuated
/// runs only; step-limited runs are reported separately in the records.
struct ExperimentSummary {
    std::string condition;
    std::vector<RunRecord> runs;
    int evacuated_runs = 0;
    double mean_evac = 0.0;
    int min_evac = 0;
    int max_evac = 0;
};

struct ExperimentResult {
    ExperimentSummary summary;
    std::vector<Trace> traces;  // in run-index order
};

/// Record for one finished run of the given scenario.
RunRecord make_run_record(const Scenario& scenario, const Trace& trace);

/// Runs `replicates` seeds base_seed .. base_seed+replicates-1 of one
/// preset. Runs may execute concurrently (threads = 0 picks a default,
/// 1 forces sequential); results are assembled in run-index order either
/// way.
ExperimentResult run_experiment(const std::string& preset_name, int replicates,
                                std::uint64_t base_seed, unsigned threads = 0);

/// Pointwise mean of remaining_total over several traces, each padded
/// with zeros after its evacuation; length equals the longest trace.
std::vector<std::pair<int, double>> survival_mean(const std::vector<Trace>& traces);

}  // namespace evacsim

#endif  // EVACSIM_SCENARIOS_HPP
