#ifndef EVACSIM_CSV_HPP
#define EVACSIM_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "evacsim/model.hpp"
#include "evacsim/scenarios.hpp"

namespace evacsim {

inline constexpr const char* kTraceCsvHeader =
    "step,remaining_total,remaining_disabled,remaining_able";

inline constexpr const char* kSummaryCsvHeader =
    "condition,run,seed,evac_time,last_disabled_exit,last_able_exit,terminated_by";

/// Integers only, one row per step starting at step 0, newline-terminated.
void write_trace_csv(std::ostream& out, const Trace& trace);
std::string trace_to_csv(const Trace& trace);

/// One row per run; evac_time (and the per-group last-exit columns) stay
/// empty when the value does not exist, e.g. a step-limited run.
void write_summary_csv(std::ostream& out, const ExperimentSummary& summary);
std::string summary_to_csv(const ExperimentSummary& summary);

const char* termination_name(Termination t);  // "evacuated" | "step_limit"

/// Remaining-count curve parsed back from a trace CSV; label is supplied
/// by the caller (the format itself does not carry one).
struct SurvivalCurve {
    std::string label;
    std::vector<TraceRow> rows;
};

SurvivalCurve read_trace_csv(std::istream& in, const std::string& label);
SurvivalCurve load_trace_csv(const std::string& path, const std::string& label);

}  // namespace evacsim

#endif  // EVACSIM_CSV_HPP
