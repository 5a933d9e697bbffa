#pragma once

#include <string>

#include "domset/discharge.hpp"
#include "domset/rules.hpp"

namespace domset {

// {"step":k,"rule":"W_HIGH","A":[...],"f_before":int,"f_after":int,"s":int,"required":int}
std::string trace_line(const TraceStep& step);

// {"done":true,"D":[...],"bound":int}; corollary runs append
// "corollary_violation".
std::string final_line(const SolveResult& result, bool corollary = false);

// Whole trace as JSON Lines, final line included, each line LF-terminated.
std::string trace_jsonl(const SolveResult& result, bool corollary = false);

// Replay record for a failed move: rule, A, D, scores and the graph text.
std::string violation_dump(const ResidualGraph& r, const WeightScheme& s, const Move& move);

std::string report_json(const TerminalReport& report, int indent = 2);

}  // namespace domset
