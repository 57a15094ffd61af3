#include "evacsim/scenarios.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "evacsim/engine.hpp"

namespace evacsim {

namespace {

constexpr int kGridColumns = 20;
constexpr int kGridCapacity = kGridColumns * kGridColumns;
constexpr double kOpeningWidth = 6.0;

}  // namespace

std::vector<Vec2> grid_positions(int n) {
    if (n < 1 || n > kGridCapacity) {
        throw std::invalid_argument("grid_positions: n must be in [1, 400]");
    }
    std::vector<Vec2> positions;
    positions.reserve(n);
    for (int i = 0; i < n; ++i) {
        positions.push_back({12.0 + 4.0 * (i % kGridColumns),
                             12.0 + 4.0 * (i / kGridColumns)});
    }
    return positions;
}

Environment build_environment(const LayoutPolicy& layout, double width, double height) {
    if (layout.restriction == ExitRestriction::SplitAccess &&
        layout.exits != ExitLayout::FourCorners) {
        throw std::invalid_argument("build_environment: split access requires the four-corner layout");
    }
    // Corner openings must not meet, side openings must fit the wall.
    if (width < 2.0 * kOpeningWidth + 1.0 || height < 2.0 * kOpeningWidth + 1.0) {
        throw std::invalid_argument("build_environment: room too small for the exit openings");
    }

    Environment env;
    env.width = width;
    env.height = height;

    const double w = width;
    const double h = height;
    auto add_exit = [&env](int id, Vec2 a, Vec2 b, ExitAccess access) {
        env.exits.push_back({id, Segment{a, b}, access});
    };

    const bool split = layout.restriction == ExitRestriction::SplitAccess;
    const ExitAccess bottom = split ? ExitAccess::DisabledOnly : ExitAccess::All;
    const ExitAccess top = split ? ExitAccess::AbleOnly : ExitAccess::All;

    add_exit(0, {0.0, 0.0}, {kOpeningWidth, 0.0}, bottom);           // bottom-left
    add_exit(1, {w - kOpeningWidth, 0.0}, {w, 0.0}, bottom);         // bottom-right
    add_exit(2, {0.0, h}, {kOpeningWidth, h}, top);                  // top-left
    add_exit(3, {w - kOpeningWidth, h}, {w, h}, top);                // top-right

    env.wall_segments.push_back({{kOpeningWidth, 0.0}, {w - kOpeningWidth, 0.0}});
    env.wall_segments.push_back({{kOpeningWidth, h}, {w - kOpeningWidth, h}});

    if (layout.exits == ExitLayout::SixExits) {
        const double lo = h * 0.5 - kOpeningWidth * 0.5;
        const double hi = h * 0.5 + kOpeningWidth * 0.5;
        add_exit(4, {0.0, lo}, {0.0, hi}, ExitAccess::All);          // left side
        add_exit(5, {w, lo}, {w, hi}, ExitAccess::All);              // right side
        env.wall_segments.push_back({{0.0, 0.0}, {0.0, lo}});
        env.wall_segments.push_back({{0.0, hi}, {0.0, h}});
        env.wall_segments.push_back({{w, 0.0}, {w, lo}});
        env.wall_segments.push_back({{w, hi}, {w, h}});
    } else {
        env.wall_segments.push_back({{0.0, 0.0}, {0.0, h}});
        env.wall_segments.push_back({{w, 0.0}, {w, h}});
    }

    return env;
}

std::set<int> apply_placement(Placement policy, int n_total, int n_disabled, RunRng& rng) {
    if (n_disabled < 0 || n_disabled > n_total) {
        throw std::invalid_argument("apply_placement: n_disabled must be in [0, n_total]");
    }
    std::set<int> disabled;
    switch (policy) {
        case Placement::None:
            if (n_disabled != 0) {
                throw std::invalid_argument("apply_placement: placement 'none' implies zero disabled agents");
            }
            break;
        case Placement::Front: {
            if (n_disabled % kGridColumns != 0) {
                throw std::invalid_argument("apply_placement: front placement needs whole rows (multiples of 20)");
            }
            for (int i = 0; i < n_disabled; ++i) disabled.insert(i);
            break;
        }
        case Placement::Middle: {
            if (n_disabled % kGridColumns != 0) {
                throw std::invalid_argument("apply_placement: middle placement needs whole rows (multiples of 20)");
            }
            const int rows = n_disabled / kGridColumns;
            const int first_row = 10 - (rows + 1) / 2;  // rows centered on 9-10
            const int first = first_row * kGridColumns;
            for (int i = first; i < first + n_disabled; ++i) disabled.insert(i);
            break;
        }
        case Placement::Random: {
            std::vector<int> indices(n_total);
            std::iota(indices.begin(), indices.end(), 0);
            for (int k = 0; k < n_disabled; ++k) {
                const int j = k + static_cast<int>(rng.next_below(
                                      static_cast<std::uint64_t>(n_total - k)));
                std::swap(indices[k], indices[j]);
            }
            disabled.insert(indices.begin(), indices.begin() + n_disabled);
            break;
        }
    }
    return disabled;
}

Scenario build_scenario(const ScenarioConfig& config) {
    if (config.n_total < 0 || config.n_total > kGridCapacity) {
        throw std::invalid_argument("scenario: n_total must be in [0, 400]");
    }

    LayoutPolicy layout{config.exits, config.restriction};
    Environment env = build_environment(layout, config.room_width, config.room_height);
    env.restricted_openings_solid = config.restricted_openings_solid;

    RunRng construction(config.seed, RunRng::Stream::Construction);
    const std::set<int> disabled =
        apply_placement(config.placement, config.n_total, config.n_disabled, construction);

    Scenario scenario;
    scenario.environment = std::move(env);
    scenario.sim = config.sim;
    scenario.seed = config.seed;
    scenario.label = config.label;

    if (config.n_total > 0) {
        const std::vector<Vec2> positions = grid_positions(config.n_total);
        scenario.agents.reserve(config.n_total);
        for (int i = 0; i < config.n_total; ++i) {
            AgentState agent;
            agent.id = i;
            agent.position = positions[i];
            const bool is_disabled = disabled.count(i) > 0;
            agent.params.disabled = is_disabled;
            agent.params.radius = is_disabled ? config.disabled.radius : config.able.radius;
            agent.params.mass = is_disabled ? config.disabled.mass : config.able.mass;
            agent.params.base_speed = config.base_speed;
            agent.params.can_fall = config.can_fall;
            agent.params.speed_multiplier = 1.0;
            agent.assigned_exit =
                assign_exit(agent.position, is_disabled, scenario.environment.exits);
            scenario.agents.push_back(agent);
        }
    }

    return scenario;
}

namespace {

ScenarioConfig base_config(const std::string& label, std::uint64_t seed) {
    ScenarioConfig c;
    c.label = label;
    c.seed = seed;
    c.n_total = 400;
    return c;
}

Placement placement_from_suffix(const std::string& name) {
    if (name.ends_with("_front")) return Placement::Front;
    if (name.ends_with("_middle")) return Placement::Middle;
    if (name.ends_with("_random")) return Placement::Random;
    throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace

ScenarioConfig preset_config(const std::string& name, std::uint64_t seed) {
    ScenarioConfig c = base_config(name, seed);
    if (name == "control") {
        return c;
    }
    if (name == "restricted_split") {
        c.n_disabled = 40;
        c.placement = Placement::Front;
        c.restriction = ExitRestriction::SplitAccess;
        return c;
    }
    if (name.starts_with("placement_")) {
        c.n_disabled = 40;
        c.placement = placement_from_suffix(name);
        return c;
    }
    if (name.starts_with("extra_exits_")) {
        c.n_disabled = 40;
        c.placement = placement_from_suffix(name);
        c.exits = ExitLayout::SixExits;
        return c;
    }
    if (name.starts_with("falling_")) {
        c.n_disabled = 40;
        c.placement = placement_from_suffix(name);
        c.can_fall = true;
        return c;
    }
    throw std::invalid_argument("unknown preset: " + name);
}

Scenario preset(const std::string& name, std::uint64_t seed) {
    return build_scenario(preset_config(name, seed));
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {
        "control",
        "placement_front",
        "placement_middle",
        "placement_random",
        "extra_exits_front",
        "extra_exits_middle",
        "extra_exits_random",
        "falling_front",
        "falling_middle",
        "falling_random",
        "restricted_split",
    };
    return names;
}

RunRecord make_run_record(const Scenario& scenario, const Trace& trace) {
    RunRecord record;
    record.seed = trace.seed;
    record.terminated_by = trace.terminated_by;
    record.evac_time = evacuation_time(trace);
    for (const auto& [id, step] : trace.exit_times) {
        if (scenario.agents[id].params.disabled) {
            record.last_disabled_exit =
                std::max(record.last_disabled_exit.value_or(step), step);
        } else {
            record.last_able_exit = std::max(record.last_able_exit.value_or(step), step);
        }
    }
    return record;
}

ExperimentResult run_experiment(const std::string& preset_name, int replicates,
                                std::uint64_t base_seed, unsigned threads) {
    if (replicates < 1) {
        throw std::invalid_argument("run_experiment: replicates must be >= 1");
    }
    preset_config(preset_name, base_seed);  // rejects unknown names up front

    ExperimentResult result;
    result.summary.condition = preset_name;
    result.summary.runs.resize(replicates);
    result.traces.resize(replicates);

    unsigned workers = threads != 0 ? threads : std::thread::hardware_concurrency();
    workers = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(replicates));

    std::atomic<int> next{0};
    auto work = [&]() {
        for (int i = next.fetch_add(1); i < replicates; i = next.fetch_add(1)) {
            const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
            const Scenario scenario = preset(preset_name, seed);
            Trace trace = run(scenario);
            result.summary.runs[i] = make_run_record(scenario, trace);
            result.traces[i] = std::move(trace);
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }

    // Aggregates over evacuated runs only.
    ExperimentSummary& s = result.summary;
    double sum = 0.0;
    for (const RunRecord& r : s.runs) {
        if (!r.evac_time) continue;
        const int t = *r.evac_time;
        if (s.evacuated_runs == 0) {
            s.min_evac = t;
            s.max_evac = t;
        } else {
            s.min_evac = std::min(s.min_evac, t);
            s.max_evac = std::max(s.max_evac, t);
        }
        sum += t;
        ++s.evacuated_runs;
    }
    s.mean_evac = s.evacuated_runs > 0 ? sum / s.evacuated_runs : 0.0;

    return result;
}

std::vector<std::pair<int, double>> survival_mean(const std::vector<Trace>& traces) {
    if (traces.empty()) {
        throw std::invalid_argument("survival_mean: at least one trace required");
    }
    std::size_t length = 0;
    for (const Trace& t : traces) length = std::max(length, t.rows.size());

    std::vector<std::pair<int, double>> curve;
    curve.reserve(length);
    for (std::size_t k = 0; k < length; ++k) {
        double sum = 0.0;
        for (const Trace& t : traces) {
            if (k < t.rows.size()) sum += t.rows[k].remaining_total;
            // traces that already evacuated contribute zero
        }
        curve.emplace_back(static_cast<int>(k), sum / static_cast<double>(traces.size()));
    }
    return curve;
}

}  // namespace evacsim
