#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "domset/residual.hpp"

namespace domset {

// Charges in units of 1/unit_scale (6 for d5, 1 for d4), keyed by non-red
// vertex. `initial` is the weight table; `charge` is after redistribution.
struct ChargeMap {
  Potential unit_scale = 1;
  std::map<Vertex, Potential> initial;
  std::map<Vertex, Potential> charge;

  Potential total_initial() const;
  Potential total() const;
};

// Per-edge transfer amounts in scaled units.
//   d5: B3 38, non-special B2 51, special 84 to W0 / 18 to the other, B1 84.
//   d4: B3 3,  non-special B2 4,  special 7 to W0 / 1 to the other,   B1 7.
struct TransferTable {
  Potential from_b3 = 0;
  Potential from_b2 = 0;
  Potential special_to_w0 = 0;
  Potential special_to_other = 0;
  Potential from_b1 = 0;
};

TransferTable transfer_table(const WeightScheme& s);

class DischargePrecondition : public std::invalid_argument {
 public:
  DischargePrecondition(const std::string& what, Vertex v)
      : std::invalid_argument(what), vertex_(v) {}
  Vertex vertex() const noexcept { return vertex_; }

 private:
  Vertex vertex_;
};

// Requires white-degree <= 2 on whites, <= 3 on blues, no B3 next to a W0
// and no B2 next to two W0 vertices; otherwise throws DischargePrecondition.
ChargeMap assign_charges(const ResidualGraph& r, const WeightScheme& s);

// Lower bound on the charge a terminal component of this shape receives,
// scaled. Nothing for shapes outside the scheme's terminal list.
std::optional<Potential> component_minimum(const WeightScheme& s, const WhiteComponent& c);

struct ComponentCharge {
  WhiteComponent component;
  int dominating_size = 0;
  Potential charge = 0;    // scaled
  Potential required = 0;  // threshold * dominating_size * unit_scale
  std::optional<Potential> minimum;
  bool pass = false;
};

struct TerminalReport {
  SchemeId scheme = SchemeId::kD5;
  Potential unit_scale = 1;
  Potential potential = 0;
  std::vector<ComponentCharge> components;
  std::vector<std::string> findings;  // structural or precondition failures
  Potential total_charge = 0;         // scaled, over white components
  bool conserved = false;             // total_charge == potential * unit_scale
  bool blues_exhausted = false;
  bool pass = false;
  std::string note;
};

// Checks that the state is terminal-ready and that the redistribution pays
// threshold per terminal vertex on every component. Never throws for a
// well-formed residual; problems become findings.
TerminalReport verify_terminal(const ResidualGraph& r, const WeightScheme& s);

}  // namespace domset
