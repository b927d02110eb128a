#ifndef FCTP_EVALUATOR_HPP
#define FCTP_EVALUATOR_HPP

// Objective and constraint evaluation. Everything here is a pure function of
// its inputs, with a fixed row-major, stage-1-before-stage-2 summation order
// so repeated runs are bit-identical.

#include <vector>

#include "fctp/model.hpp"

namespace fctp {

struct CostBreakdown {
  double transport = 0.0;  // Z_tc: manufacturer->center plus center->customer per-unit costs
  double fixed = 0.0;      // Z_fc: opening costs plus per-edge fixed charges
  double total = 0.0;      // Z = transport + fixed
};

// Open/used flags derived from the flow with a strict > 0 threshold, so the
// zero solution opens nothing and incurs no fixed cost.
struct Indicators {
  std::vector<bool> center_open;         // y_i
  std::vector<std::vector<bool>> edge_used;  // y_ij
};

// The emission total has two readings; `example` follows the worked
// computation (no capacity/demand multipliers) and is the default
// everywhere, `eq9_literal` keeps the a_i / b_j multipliers.
enum class GhgMode { example, eq9_literal };

struct FeasibilityReport {
  bool nonneg_ok = false;    // all x_ij >= 0
  bool capacity_ok = false;  // sum_j x_ij <= a_i for every center
  bool demand_ok = false;    // sum_i x_ij == b_j for every customer (within tolerance)
  double emissions = 0.0;
  bool ghg_ok = false;       // emissions <= cap
  bool feasible = false;     // conjunction of the four flags
};

// x_i = sum_j x_ij for each center.
std::vector<double> stage1_flows(const Solution& solution);

Indicators indicators(const Solution& solution);

// Z broken into transport and fixed parts; throws invalid_argument when the
// flow shape does not match the instance.
CostBreakdown total_cost(const Instance& instance, const Solution& solution);

double ghg_emissions(const Instance& instance, const EmissionParams& params,
                     const Solution& solution, GhgMode mode);

// demand_ok uses |sum_i x_ij - b_j| <= 1e-9 * max(1, b_j) to absorb rounding
// from split shipments; the other checks are exact.
FeasibilityReport check_feasibility(const Instance& instance, const EmissionParams& params,
                                    const Solution& solution, GhgMode mode);

}  // namespace fctp

#endif  // FCTP_EVALUATOR_HPP
