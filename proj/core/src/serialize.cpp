#include "domset/serialize.hpp"

#include <json.hpp>

namespace domset {

using json = nlohmann::ordered_json;

std::string trace_line(const TraceStep& step) {
  json j;
  j["step"] = step.step;
  j["rule"] = to_string(step.move.rule);
  j["A"] = step.move.added;
  j["f_before"] = step.before;
  j["f_after"] = step.after;
  j["s"] = step.move.realized;
  j["required"] = step.move.required;
  return j.dump();
}

std::string final_line(const SolveResult& result, bool corollary) {
  json j;
  j["done"] = true;
  j["D"] = result.dominating_set;
  j["bound"] = result.bound;
  if (corollary) j["corollary_violation"] = result.corollary_violation;
  return j.dump();
}

std::string trace_jsonl(const SolveResult& result, bool corollary) {
  std::string out;
  for (const auto& step : result.trace) out += trace_line(step) + "\n";
  out += final_line(result, corollary) + "\n";
  return out;
}

std::string violation_dump(const ResidualGraph& r, const WeightScheme& s, const Move& move) {
  json j;
  j["error"] = "proof violation";
  j["scheme"] = s.name();
  j["rule"] = to_string(move.rule);
  j["A"] = move.added;
  j["s"] = move.realized;
  j["required"] = move.required;
  j["D"] = r.chosen();
  j["graph"] = serialize_graph(r.base());
  return j.dump();
}

std::string report_json(const TerminalReport& report, int indent) {
  json j;
  j["scheme"] = report.scheme == SchemeId::kD5 ? "d5" : "d4";
  j["pass"] = report.pass;
  j["unit_scale"] = report.unit_scale;
  j["potential"] = report.potential;
  j["total_charge"] = report.total_charge;
  j["conserved"] = report.conserved;
  j["blues_exhausted"] = report.blues_exhausted;
  j["findings"] = report.findings;
  json comps = json::array();
  for (const auto& c : report.components) {
    json cj;
    cj["kind"] = to_string(c.component.kind);
    cj["vertices"] = c.component.vertices;
    cj["a_c"] = c.dominating_size;
    cj["charge"] = c.charge;
    cj["required"] = c.required;
    if (c.minimum) cj["minimum"] = *c.minimum;
    cj["pass"] = c.pass;
    comps.push_back(std::move(cj));
  }
  j["components"] = std::move(comps);
  if (!report.note.empty()) j["note"] = report.note;
  return j.dump(indent);
}

}  // namespace domset
