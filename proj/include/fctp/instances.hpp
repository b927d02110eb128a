#ifndef FCTP_INSTANCES_HPP
#define FCTP_INSTANCES_HPP

// Seeded benchmark generation. Values are uniform in their ranges;
// capacities are drawn as relative shares and rescaled so that total
// capacity is exactly capacity_slack times total demand, which keeps every
// generated instance valid. Integral data by default.

#include <cstdint>
#include <string>
#include <vector>

#include "fctp/model.hpp"

namespace fctp {

struct ValueRange {
  double lo = 0.0;
  double hi = 0.0;
};

struct GenSpec {
  std::size_t m = 0;
  std::size_t n = 0;
  ValueRange demand_range{10, 100};
  ValueRange unit_cost_range{1, 10};
  ValueRange fixed_cost_range{50, 200};
  ValueRange opening_cost_range{100, 500};
  double capacity_slack = 1.5;  // sum a_i = slack * sum b_j
  std::uint64_t seed = 0;
  bool integral = true;

  // Stage-1 unit costs reuse unit_cost_range; emission factors and cap
  // default to the benchmark setting below.
  double alpha_manufacturer = 0.02;
  double alpha = 0.02;
  double beta_manufacturer = 0.04;
  double beta = 0.04;
  double ghg_cap = 150000.0;
};

struct GeneratedInstance {
  std::string id;
  Instance instance;
  EmissionParams params;
};

// Deterministic in spec.seed; throws invalid_argument on a malformed spec
// (empty dimensions, lo > hi, negative lo, slack < 1).
GeneratedInstance generate_instance(const GenSpec& spec);

// Benchmark dimension families: small 10x10, medium 10x30, large 30x100.
enum class Preset { small, medium, large };

const char* preset_name(Preset p);
Preset parse_preset(const std::string& name);

// Three instances per preset with seeds seed, seed+1, seed+2, ids like
// "small_0".
std::vector<GeneratedInstance> generate_preset(Preset preset, std::uint64_t seed);

}  // namespace fctp

#endif  // FCTP_INSTANCES_HPP
