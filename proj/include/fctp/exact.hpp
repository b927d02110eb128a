#ifndef FCTP_EXACT_HPP
#define FCTP_EXACT_HPP

// Exhaustive oracle for desk-scale instances. Enumerates every map of
// customers to single centers (no splits), which is the true optimum on
// slack-capacity instances: splitting a customer only adds fixed charges
// without reducing any linear term.

#include <stdexcept>

#include "fctp/evaluator.hpp"
#include "fctp/model.hpp"

namespace fctp {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoFeasibleAssignment : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class EnumerationScope { unsplit_assignments };

struct OracleResult {
  Solution solution;
  CostBreakdown cost;
  EnumerationScope optimal_over = EnumerationScope::unsplit_assignments;
};

// Minimum-cost demand-satisfying unsplit assignment; ties go to the
// lexicographically smallest assignment vector. Requires m^n <= 10^7
// (BudgetExceeded otherwise) and throws NoFeasibleAssignment when no
// capacity-respecting assignment exists. With enforce_ghg_cap the
// enumeration also discards solutions over the emission cap.
OracleResult brute_force_optimum(const Instance& instance, const EmissionParams& params,
                                 GhgMode mode, bool enforce_ghg_cap = false);

}  // namespace fctp

#endif  // FCTP_EXACT_HPP
