#include "fctp/heuristics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace fctp {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::nn: return "nn";
    case Variant::dx: return "dx";
    case Variant::dy10: return "dy10";
    case Variant::dy11: return "dy11";
    case Variant::dy12: return "dy12";
  }
  return "?";
}

Variant parse_variant(const std::string& name) {
  for (Variant v : kAllVariants)
    if (name == variant_name(v)) return v;
  throw std::invalid_argument("unknown variant '" + name + "'");
}

ConstructionState::ConstructionState(const Instance& instance, std::uint64_t seed)
    : remaining_capacity(instance.center_count()),
      remaining_demand(instance.customer_count()),
      xcont(instance.center_count(), 0),
      flow(instance.center_count(), instance.customer_count(), 0.0),
      rng(seed) {
  for (std::size_t i = 0; i < remaining_capacity.size(); ++i)
    remaining_capacity[i] = instance.centers[i].capacity;
  for (std::size_t j = 0; j < remaining_demand.size(); ++j) {
    remaining_demand[j] = instance.customers[j].demand;
    request += remaining_demand[j];
  }
}

std::vector<double> selection_weights(const ConstructionState& state, Variant variant) {
  if (variant != Variant::dy10 && variant != Variant::dy11 && variant != Variant::dy12)
    throw std::invalid_argument("selection_weights is defined for the dy variants only");
  if (!(state.request > 0.0)) throw std::logic_error("request is zero");

  std::vector<double> weights(state.remaining_capacity.size(), 0.0);
  bool any = false;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double cap = state.remaining_capacity[i];
    if (cap <= 0.0) continue;
    const double uses = static_cast<double>(std::max(state.xcont[i], 1));
    switch (variant) {
      case Variant::dy10: weights[i] = cap / state.request; break;
      case Variant::dy11: weights[i] = cap / (uses * state.request); break;
      default: weights[i] = uses / cap; break;  // dy12
    }
    any = true;
  }
  if (!any) throw std::logic_error("all selection weights are zero: no remaining capacity");
  return weights;
}

namespace {

std::size_t weighted_pick(Rng& rng, const std::vector<double>& weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  const double u = rng.next_double() * total;
  double cum = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    cum += weights[i];
    last_positive = i;
    if (u < cum) return i;
  }
  return last_positive;  // u == total after rounding
}

std::size_t nearest_center(const ConstructionState& state, const Instance& instance) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  double best_cost = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < state.remaining_capacity.size(); ++i) {
    if (state.remaining_capacity[i] <= 0.0) continue;
    for (std::size_t j = 0; j < state.remaining_demand.size(); ++j) {
      if (state.remaining_demand[j] <= 0.0) continue;
      const double c = instance.edge_unit_cost(i, j);
      if (c < best_cost) {
        best_cost = c;
        best = i;
      }
    }
  }
  if (best == std::numeric_limits<std::size_t>::max())
    throw std::logic_error("no eligible center");
  return best;
}

}  // namespace

std::size_t select_center(ConstructionState& state, const Instance& instance, Variant variant) {
  if (variant == Variant::nn) return nearest_center(state, instance);

  if (variant == Variant::dx) {
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < state.remaining_capacity.size(); ++i)
      if (state.remaining_capacity[i] > 0.0) eligible.push_back(i);
    if (eligible.empty()) throw std::logic_error("no eligible center");
    return eligible[state.rng.next_index(eligible.size())];
  }

  return weighted_pick(state.rng, selection_weights(state, variant));
}

void assign_from_center(ConstructionState& state, const Instance& instance, std::size_t center) {
  if (!(state.remaining_capacity[center] > 0.0))
    throw std::invalid_argument("selected center has no remaining capacity");

  const std::size_t n = state.remaining_demand.size();
  while (state.remaining_capacity[center] > 0.0) {
    std::size_t best = n;
    double best_cost = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (state.remaining_demand[j] <= 0.0) continue;
      const double c = instance.edge_unit_cost(center, j);
      if (c < best_cost) {
        best_cost = c;
        best = j;
      }
    }
    if (best == n) break;  // all demand served

    const double q = std::min(state.remaining_capacity[center], state.remaining_demand[best]);
    if (state.flow(center, best) == 0.0 && q > 0.0) ++state.xcont[center];
    state.flow(center, best) += q;
    state.remaining_capacity[center] -= q;
    state.remaining_demand[best] -= q;

    // Recompute instead of decrementing: zeroed demands stay exactly zero,
    // so the construction loop terminates on request == 0.
    state.request = 0.0;
    for (double d : state.remaining_demand) state.request += d;
  }
}

SolveResult construct_solution(const Instance& instance, const EmissionParams& params,
                               GhgMode mode, Variant variant, std::uint64_t seed) {
  const auto report = validate_instance(instance);
  if (!report.ok)
    throw std::invalid_argument("invalid instance: " + report.violations.front().message);

  ConstructionState state(instance, seed);
  while (state.request > 0.0) {
    const std::size_t center = select_center(state, instance, variant);
    assign_from_center(state, instance, center);
  }

  SolveResult result;
  result.solution = Solution{std::move(state.flow)};
  result.cost = total_cost(instance, result.solution);
  result.feasibility = check_feasibility(instance, params, result.solution, mode);
  result.emissions = result.feasibility.emissions;
  result.variant = variant;
  result.seed = seed;
  return result;
}

}  // namespace fctp
