#include "fctp/instances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "fctp/rng.hpp"

namespace fctp {

namespace {

void require_valid(const GenSpec& spec) {
  if (spec.m == 0 || spec.n == 0) throw std::invalid_argument("m and n must be positive");
  for (const auto& r : {spec.demand_range, spec.unit_cost_range, spec.fixed_cost_range,
                        spec.opening_cost_range}) {
    if (r.lo > r.hi) throw std::invalid_argument("range lo > hi");
    if (r.lo < 0.0) throw std::invalid_argument("range lo < 0");
  }
  if (spec.capacity_slack < 1.0) throw std::invalid_argument("capacity_slack must be >= 1");
  if (spec.alpha_manufacturer < 0 || spec.alpha < 0 || spec.beta_manufacturer < 0 ||
      spec.beta < 0)
    throw std::invalid_argument("emission factors must be nonnegative");
  if (spec.ghg_cap <= 0) throw std::invalid_argument("ghg_cap must be positive");
}

double draw(Rng& rng, ValueRange r, bool integral) {
  if (integral) {
    const auto lo = static_cast<std::int64_t>(std::ceil(r.lo));
    const auto hi = static_cast<std::int64_t>(std::floor(r.hi));
    if (hi < lo) return std::ceil(r.lo);  // no integer in range, pin to lo
    return static_cast<double>(lo + static_cast<std::int64_t>(
                                        rng.next_index(static_cast<std::uint64_t>(hi - lo + 1))));
  }
  return r.lo + rng.next_double() * (r.hi - r.lo);
}

// Integer apportionment of `total` proportional to weights: floor the exact
// shares, then hand out the remainder by largest fractional part (ties to
// the lowest index).
std::vector<double> apportion(const std::vector<double>& weights, double total) {
  const double wsum = std::accumulate(weights.begin(), weights.end(), 0.0);
  const std::size_t m = weights.size();
  std::vector<double> out(m);
  std::vector<std::pair<double, std::size_t>> fractions(m);
  double assigned = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double share = weights[i] / wsum * total;
    out[i] = std::floor(share);
    assigned += out[i];
    fractions[i] = {share - out[i], i};
  }
  std::stable_sort(fractions.begin(), fractions.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  auto leftover = static_cast<std::size_t>(total - assigned + 0.5);
  for (std::size_t k = 0; k < leftover && k < m; ++k) out[fractions[k].second] += 1.0;
  // leftover <= m because each floor drops less than 1
  return out;
}

}  // namespace

GeneratedInstance generate_instance(const GenSpec& spec) {
  require_valid(spec);
  Rng rng(spec.seed);
  const std::size_t m = spec.m;
  const std::size_t n = spec.n;

  GeneratedInstance out;
  out.id = std::to_string(m) + "x" + std::to_string(n) + "_s" + std::to_string(spec.seed);
  Instance& inst = out.instance;
  inst.customers.resize(n);
  for (std::size_t j = 0; j < n; ++j)
    inst.customers[j].demand = draw(rng, spec.demand_range, spec.integral);
  const double total_demand = inst.total_demand();

  // Relative capacity shares, then rescale to hit the slack target.
  std::vector<double> shares(m);
  for (std::size_t i = 0; i < m; ++i) shares[i] = 1.0 + rng.next_double();

  inst.centers.resize(m);
  const double target = spec.capacity_slack * total_demand;
  if (spec.integral) {
    const double total_capacity = std::ceil(target - 1e-9);
    const auto caps = apportion(shares, total_capacity);
    for (std::size_t i = 0; i < m; ++i) inst.centers[i].capacity = caps[i];
  } else {
    const double wsum = std::accumulate(shares.begin(), shares.end(), 0.0);
    for (std::size_t i = 0; i < m; ++i) inst.centers[i].capacity = shares[i] / wsum * target;
    // Left-to-right rounding can leave the sum a few ulps under the demand
    // total; nudge the first capacity until the exact check holds.
    while (inst.total_capacity() < total_demand)
      inst.centers[0].capacity = std::nextafter(
          inst.centers[0].capacity + (total_demand - inst.total_capacity()),
          std::numeric_limits<double>::infinity());
  }

  for (std::size_t i = 0; i < m; ++i) {
    inst.centers[i].opening_cost = draw(rng, spec.opening_cost_range, spec.integral);
    inst.centers[i].unit_transport_cost = draw(rng, spec.unit_cost_range, spec.integral);
  }

  inst.edge_fixed_cost = Matrix(m, n);
  inst.edge_unit_cost = Matrix(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inst.edge_fixed_cost(i, j) = draw(rng, spec.fixed_cost_range, spec.integral);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inst.edge_unit_cost(i, j) = draw(rng, spec.unit_cost_range, spec.integral);

  out.params = EmissionParams::uniform(spec.alpha_manufacturer, spec.alpha,
                                       spec.beta_manufacturer, spec.beta, spec.ghg_cap, m, n);
  return out;
}

const char* preset_name(Preset p) {
  switch (p) {
    case Preset::small: return "small";
    case Preset::medium: return "medium";
    case Preset::large: return "large";
  }
  return "?";
}

Preset parse_preset(const std::string& name) {
  for (Preset p : {Preset::small, Preset::medium, Preset::large})
    if (name == preset_name(p)) return p;
  throw std::invalid_argument("unknown preset '" + name + "'");
}

std::vector<GeneratedInstance> generate_preset(Preset preset, std::uint64_t seed) {
  GenSpec spec;
  switch (preset) {
    case Preset::small: spec.m = 10; spec.n = 10; break;
    case Preset::medium: spec.m = 10; spec.n = 30; break;
    case Preset::large: spec.m = 30; spec.n = 100; break;
  }
  std::vector<GeneratedInstance> out;
  for (int k = 0; k < 3; ++k) {
    spec.seed = seed + static_cast<std::uint64_t>(k);
    auto gen = generate_instance(spec);
    gen.id = std::string(preset_name(preset)) + "_" + std::to_string(k);
    out.push_back(std::move(gen));
  }
  return out;
}

}  // namespace fctp
