#include "evacsim/csv.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace evacsim {

const char* termination_name(Termination t) {
    return t == Termination::Evacuated ? "evacuated" : "step_limit";
}

void write_trace_csv(std::ostream& out, const Trace& trace) {
    out << kTraceCsvHeader << '\n';
    for (const TraceRow& row : trace.rows) {
        out << row.step << ',' << row.remaining_total << ','
            << row.remaining_disabled << ',' << row.remaining_able << '\n';
    }
}

std::string trace_to_csv(const Trace& trace) {
    std::ostringstream out;
    write_trace_csv(out, trace);
    return out.str();
}

void write_summary_csv(std::ostream& out, const ExperimentSummary& summary) {
    out << kSummaryCsvHeader << '\n';
    for (std::size_t i = 0; i < summary.runs.size(); ++i) {
        const RunRecord& r = summary.runs[i];
        out << summary.condition << ',' << i << ',' << r.seed << ',';
        if (r.evac_time) out << *r.evac_time;
        out << ',';
        if (r.last_disabled_exit) out << *r.last_disabled_exit;
        out << ',';
        if (r.last_able_exit) out << *r.last_able_exit;
        out << ',' << termination_name(r.terminated_by) << '\n';
    }
}

std::string summary_to_csv(const ExperimentSummary& summary) {
    std::ostringstream out;
    write_summary_csv(out, summary);
    return out.str();
}

namespace {

int parse_count(const std::string& field, const std::string& context) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(field, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error(context + ": expected an integer, got \"" + field + "\"");
    }
    if (pos != field.size() || value < 0) {
        throw std::runtime_error(context + ": expected a nonnegative integer, got \"" + field + "\"");
    }
    return value;
}

}  // namespace

SurvivalCurve read_trace_csv(std::istream& in, const std::string& label) {
    SurvivalCurve curve;
    curve.label = label;

    std::string line;
    if (!std::getline(in, line) || line != kTraceCsvHeader) {
        throw std::runtime_error(label + ": not a trace CSV (bad header)");
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string field;
        TraceRow row;
        int* cells[4] = {&row.step, &row.remaining_total,
                         &row.remaining_disabled, &row.remaining_able};
        for (int c = 0; c < 4; ++c) {
            if (!std::getline(fields, field, ',')) {
                throw std::runtime_error(label + ": short row \"" + line + "\"");
            }
            *cells[c] = parse_count(field, label);
        }
        curve.rows.push_back(row);
    }
    if (curve.rows.empty()) {
        throw std::runtime_error(label + ": trace has no rows");
    }
    return curve;
}

SurvivalCurve load_trace_csv(const std::string& path, const std::string& label) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open trace file " + path);
    return read_trace_csv(in, label);
}

}  // namespace evacsim
