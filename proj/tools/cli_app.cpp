#include "cli_app.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "evacsim/csv.hpp"
#include "evacsim/engine.hpp"
#include "evacsim/scenario_io.hpp"
#include "evacsim/scenarios.hpp"
#include "evacsim/svg.hpp"

namespace fs = std::filesystem;

namespace evacsim::cli {

namespace {

unsigned threads_from_env() {
    const char* raw = std::getenv("EVACSIM_THREADS");
    if (raw == nullptr || *raw == '\0') return 0;
    char* end = nullptr;
    const unsigned long value = std::strtoul(raw, &end, 10);
    if (end == raw || *end != '\0') {
        std::cerr << "warning: ignoring unparsable EVACSIM_THREADS=\"" << raw << "\"\n";
        return 0;
    }
    return static_cast<unsigned>(value);
}

struct SimulateOptions {
    std::string scenario_path;
    std::string preset_name;
    std::uint64_t seed = 1;
    bool seed_given = false;
    std::string out_path;      // empty -> stdout
    std::string summary_path;  // empty -> none
};

int cmd_simulate(const SimulateOptions& opt) {
    Scenario scenario;
    try {
        ScenarioConfig config;
        if (!opt.preset_name.empty()) {
            config = preset_config(opt.preset_name, opt.seed);
        } else {
            config = load_scenario_file(opt.scenario_path);
            if (opt.seed_given) config.seed = opt.seed;
        }
        scenario = build_scenario(config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }

    Trace trace;
    try {
        trace = run(scenario);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }

    if (opt.out_path.empty()) {
        write_trace_csv(std::cout, trace);
    } else {
        std::ofstream out(opt.out_path);
        if (!out) {
            std::cerr << "error: cannot write " << opt.out_path << '\n';
            return kError;
        }
        write_trace_csv(out, trace);
    }

    if (!opt.summary_path.empty()) {
        ExperimentSummary summary;
        summary.condition = scenario.label;
        summary.runs.push_back(make_run_record(scenario, trace));
        std::ofstream out(opt.summary_path);
        if (!out) {
            std::cerr << "error: cannot write " << opt.summary_path << '\n';
            return kError;
        }
        write_summary_csv(out, summary);
    }

    return trace.terminated_by == Termination::Evacuated ? kOk : kStepLimit;
}

struct ExperimentOptions {
    std::string preset_name;
    bool all = false;
    int replicates = 5;
    std::uint64_t base_seed = 1;
    std::string out_dir = ".";
};

int cmd_experiment(const ExperimentOptions& opt) {
    if (opt.replicates < 1) {
        std::cerr << "error: --replicates must be >= 1\n";
        return kError;
    }

    std::vector<std::string> conditions;
    if (opt.all) {
        conditions = preset_names();
    } else {
        conditions.push_back(opt.preset_name);
    }

    std::error_code ec;
    fs::create_directories(opt.out_dir, ec);
    if (ec) {
        std::cerr << "error: cannot create " << opt.out_dir << ": " << ec.message() << '\n';
        return kError;
    }

    const unsigned threads = threads_from_env();
    for (const std::string& name : conditions) {
        ExperimentResult result;
        try {
            result = run_experiment(name, opt.replicates, opt.base_seed, threads);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kError;
        }

        for (const Trace& trace : result.traces) {
            std::ostringstream file;
            file << name << "_seed" << trace.seed << ".trace.csv";
            const fs::path path = fs::path(opt.out_dir) / file.str();
            std::ofstream out(path);
            if (!out) {
                std::cerr << "error: cannot write " << path.string() << '\n';
                return kError;
            }
            write_trace_csv(out, trace);
        }

        const fs::path summary_path = fs::path(opt.out_dir) / (name + ".summary.csv");
        std::ofstream out(summary_path);
        if (!out) {
            std::cerr << "error: cannot write " << summary_path.string() << '\n';
            return kError;
        }
        write_summary_csv(out, result.summary);

        std::cerr << name << ": " << result.summary.evacuated_runs << "/"
                  << result.summary.runs.size() << " runs evacuated";
        if (result.summary.evacuated_runs > 0) {
            std::cerr << ", mean evac time " << result.summary.mean_evac;
        }
        std::cerr << '\n';
    }

    return kOk;
}

struct PlotOptions {
    std::vector<std::string> trace_globs;
    std::string out_path = "survival.svg";
    std::string title = "Evacuation survival curves";
};

std::string curve_label(const fs::path& path) {
    std::string name = path.filename().string();
    for (const char* suffix : {".csv", ".trace"}) {
        if (name.ends_with(suffix)) name.resize(name.size() - std::string(suffix).size());
    }
    return name;
}

int cmd_plot(const PlotOptions& opt) {
    std::vector<std::string> paths;
    for (const std::string& pattern : opt.trace_globs) {
        const std::vector<std::string> matched = expand_glob(pattern);
        paths.insert(paths.end(), matched.begin(), matched.end());
    }
    std::sort(paths.begin(), paths.end());
    paths.erase(std::unique(paths.begin(), paths.end()), paths.end());

    if (paths.empty()) {
        std::cerr << "error: no trace files match";
        for (const std::string& pattern : opt.trace_globs) std::cerr << " " << pattern;
        std::cerr << '\n';
        return kError;
    }

    std::vector<SurvivalCurve> curves;
    try {
        for (const std::string& path : paths) {
            curves.push_back(load_trace_csv(path, curve_label(path)));
        }
        const std::string svg = render_survival_svg(curves, opt.title);
        std::ofstream out(opt.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << opt.out_path << '\n';
            return kError;
        }
        out << svg;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return kOk;
}

}  // namespace

std::vector<std::string> expand_glob(const std::string& pattern) {
    const fs::path as_path(pattern);
    const std::string filename = as_path.filename().string();

    if (filename.find('*') == std::string::npos &&
        filename.find('?') == std::string::npos) {
        if (fs::is_regular_file(as_path)) return {pattern};
        return {};
    }

    std::string rx;
    for (char ch : filename) {
        switch (ch) {
            case '*': rx += ".*"; break;
            case '?': rx += '.'; break;
            default:
                if (std::isalnum(static_cast<unsigned char>(ch))) rx += ch;
                else { rx += '\\'; rx += ch; }
        }
    }
    const std::regex matcher(rx);

    const fs::path dir = as_path.has_parent_path() ? as_path.parent_path() : fs::path(".");
    std::vector<std::string> out;
    std::error_code ec;
    for (const fs::directory_entry& entry : fs::directory_iterator(dir, ec)) {
        if (!entry.is_regular_file()) continue;
        if (std::regex_match(entry.path().filename().string(), matcher)) {
            out.push_back(as_path.has_parent_path()
                              ? (dir / entry.path().filename()).string()
                              : entry.path().filename().string());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Deterministic agent-based room-evacuation simulator"};
    app.require_subcommand(1);

    SimulateOptions sim_opt;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "Run one scenario and emit its trace CSV");
    auto* opt_scenario =
        simulate->add_option("--scenario", sim_opt.scenario_path, "Scenario JSON file");
    auto* opt_preset =
        simulate->add_option("--preset", sim_opt.preset_name, "Preset name (see list-presets)");
    auto* opt_seed = simulate->add_option("--seed", sim_opt.seed, "Run seed (default 1)");
    simulate->add_option("--out", sim_opt.out_path, "Trace CSV path (default stdout)");
    simulate->add_option("--summary", sim_opt.summary_path, "Also write a one-run summary CSV");
    opt_scenario->excludes(opt_preset);
    opt_preset->excludes(opt_scenario);

    ExperimentOptions exp_opt;
    CLI::App* experiment = app.add_subcommand(
        "experiment", "Run replicated experiments and emit traces + summaries");
    auto* opt_exp_preset =
        experiment->add_option("--preset", exp_opt.preset_name, "Preset name");
    auto* opt_all = experiment->add_flag("--all", exp_opt.all, "Run every preset");
    experiment->add_option("--replicates", exp_opt.replicates, "Runs per condition (default 5)");
    experiment->add_option("--base-seed", exp_opt.base_seed,
                           "First seed; run k uses base-seed + k (default 1)");
    experiment->add_option("--out-dir", exp_opt.out_dir, "Output directory (default .)");
    opt_exp_preset->excludes(opt_all);
    opt_all->excludes(opt_exp_preset);

    PlotOptions plot_opt;
    CLI::App* plot = app.add_subcommand(
        "plot", "Render trace CSVs as an SVG survival chart");
    plot->add_option("--traces", plot_opt.trace_globs, "Trace file or glob (repeatable)")
        ->required();
    plot->add_option("--out", plot_opt.out_path, "SVG output path (default survival.svg)");
    plot->add_option("--title", plot_opt.title, "Chart title");

    CLI::App* list = app.add_subcommand("list-presets", "Print the preset names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kError;
    }

    if (simulate->parsed()) {
        if (opt_scenario->count() + opt_preset->count() != 1) {
            std::cerr << "error: exactly one of --scenario/--preset is required\n";
            return kError;
        }
        sim_opt.seed_given = opt_seed->count() > 0;
        return cmd_simulate(sim_opt);
    }
    if (experiment->parsed()) {
        if (opt_exp_preset->count() + opt_all->count() != 1) {
            std::cerr << "error: exactly one of --preset/--all is required\n";
            return kError;
        }
        return cmd_experiment(exp_opt);
    }
    if (plot->parsed()) {
        return cmd_plot(plot_opt);
    }
    if (list->parsed()) {
        for (const std::string& name : preset_names()) std::cout << name << '\n';
        return kOk;
    }
    return kError;
}

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("evacsim");
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace evacsim::cli
