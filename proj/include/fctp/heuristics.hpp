#ifndef FCTP_HEURISTICS_HPP
#define FCTP_HEURISTICS_HPP

// Constructive solvers built from two moves: pick a distribution center,
// then greedily ship from it to the cheapest unserved customers until the
// center is exhausted or all demand is met. The variants differ only in how
// the next center is picked:
//
//   nn    cheapest reachable edge, fully deterministic
//   dx    uniform among centers with remaining capacity
//   dy10  weight a_i / request
//   dy11  weight a_i / (max(xcont_i, 1) * request)
//   dy12  weight max(xcont_i, 1) / a_i
//
// where a_i and request are the *remaining* capacity and demand, and
// xcont_i counts the nonzero shipments already assigned from center i.

#include <cstdint>
#include <string>
#include <vector>

#include "fctp/evaluator.hpp"
#include "fctp/model.hpp"
#include "fctp/rng.hpp"

namespace fctp {

enum class Variant { nn, dx, dy10, dy11, dy12 };

const char* variant_name(Variant v);
// Throws invalid_argument on unknown names.
Variant parse_variant(const std::string& name);
inline constexpr Variant kAllVariants[] = {Variant::nn, Variant::dx, Variant::dy10,
                                           Variant::dy11, Variant::dy12};

// Mutable bookkeeping for one construction run.
struct ConstructionState {
  std::vector<double> remaining_capacity;
  std::vector<double> remaining_demand;
  double request = 0.0;        // sum of remaining_demand, recomputed exactly
  std::vector<int> xcont;      // nonzero shipments assigned per center so far
  Matrix flow;
  Rng rng;

  ConstructionState(const Instance& instance, std::uint64_t seed);
};

struct SolveResult {
  Solution solution;
  CostBreakdown cost;
  double emissions = 0.0;
  FeasibilityReport feasibility;
  Variant variant = Variant::nn;
  std::uint64_t seed = 0;
};

// Raw (unnormalized) center-selection weights for the dy variants; zero
// exactly where remaining capacity is zero. Throws logic_error if every
// weight is zero, which the construction invariants rule out.
std::vector<double> selection_weights(const ConstructionState& state, Variant variant);

// Picks the next center per the variant. dx/dy advance the rng; nn is a
// deterministic argmin over eligible centers (ties to the lowest index).
std::size_t select_center(ConstructionState& state, const Instance& instance, Variant variant);

// Ships from `center` to the cheapest unserved customers (ties to the lowest
// index), splitting the last shipment if capacity runs out.
void assign_from_center(ConstructionState& state, const Instance& instance, std::size_t center);

// Full construction; pure function of (instance, params, mode, variant, seed).
// The result always satisfies nonnegativity, capacity, and demand; the GHG cap
// is reported, not enforced. Throws invalid_argument on an invalid instance.
SolveResult construct_solution(const Instance& instance, const EmissionParams& params,
                               GhgMode mode, Variant variant, std::uint64_t seed);

}  // namespace fctp

#endif  // FCTP_HEURISTICS_HPP
