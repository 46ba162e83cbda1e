#pragma once

#include <string>
#include <vector>

namespace spinnet {

/// Cross-check of one closed-form expression against the exact simulator.
struct FormulaCheck {
  std::string id;        // short slug naming the quantity under test
  std::string formula;   // the closed form being checked, as text
  double max_abs_deviation = 0.0;
  double tolerance = 0.0;
  bool confirmed = false;  // max_abs_deviation <= tolerance
  std::vector<std::string> notes;
};

struct DiscrepancyReport {
  std::vector<FormulaCheck> checks;
  std::string to_text() const;
};

/// Evaluates every bundled closed-form candidate over its test grid and
/// reports the deviation from the simulator together with a verdict line.
/// Times in the closed forms follow the convention in which a lone edge
/// produces single-excitation amplitudes cos(t) and sin(t); the simulator is
/// run at coupling scale 1/2 to match it.
DiscrepancyReport build_discrepancy_report();

// Individual checks, exposed so tests can assert on structured results.
FormulaCheck check_one_pair_efficiency();
FormulaCheck check_one_pair_optimum();
FormulaCheck check_three_node_max_efficiency();
FormulaCheck check_four_node_max_efficiency();
FormulaCheck check_five_node_efficiency_at_pi();
FormulaCheck check_two_pair_outcome_probabilities();
FormulaCheck check_two_pair_outcome_concurrences();
FormulaCheck check_two_pair_efficiency();
FormulaCheck check_werner_pair_offset();
FormulaCheck check_heisenberg_equivalence();

}  // namespace spinnet
