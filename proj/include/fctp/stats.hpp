#ifndef FCTP_STATS_HPP
#define FCTP_STATS_HPP

// Experiment harness and the unpaired two-sample t-test used to compare
// heuristic variants. p-values come from the regularized incomplete beta
// function, evaluated here by continued fraction, so no statistics library
// is involved.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fctp/evaluator.hpp"
#include "fctp/heuristics.hpp"
#include "fctp/instances.hpp"
#include "fctp/model.hpp"

namespace fctp {

struct TTestResult {
  double t = 0.0;
  double p = 1.0;  // two-tailed, in (0, 1]
  double df = 0.0;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
};

enum class TTestKind { student, welch };

// Classical unpaired test: pooled-variance Student by default, Welch df
// behind the flag. Degenerate inputs: fewer than two values per sample or
// two zero-variance samples with different means raise invalid_argument;
// zero variance with equal means yields t = 0, p = 1.
TTestResult unpaired_t_test(std::span<const double> sample_a, std::span<const double> sample_b,
                            TTestKind kind = TTestKind::student);

// I_x(a, b), accurate to ~1e-14. Exposed for tests.
double regularized_incomplete_beta(double a, double b, double x);

struct TrialRow {
  std::string instance_id;
  Variant variant = Variant::nn;
  std::uint64_t seed = 0;
  double cost = 0.0;       // Z
  double emissions = 0.0;
  bool ghg_ok = false;
};

// Rows in deterministic (instance, variant, trial) order.
struct TrialTable {
  std::vector<TrialRow> rows;
};

// Per-trial seed: a stable hash of (base_seed, instance id, variant, trial),
// identical across platforms and runs.
std::uint64_t trial_seed(std::uint64_t base_seed, const std::string& instance_id,
                         Variant variant, int trial);

// Solves every (instance, variant, trial) combination. The deterministic nn
// variant contributes a single trial per instance.
TrialTable run_experiment(std::span<const GeneratedInstance> instances, GhgMode mode,
                          std::span<const Variant> variants, int trials_per_variant,
                          std::uint64_t base_seed);

enum class Metric { cost, emissions };

// One test per non-baseline variant (sample_a) against the baseline
// (sample_b), samples pooled across instances. Throws invalid_argument when
// the baseline is missing from the table.
std::vector<std::pair<Variant, TTestResult>> compare_vs_baseline(const TrialTable& table,
                                                                 Variant baseline,
                                                                 Metric metric);

// Tab-separated renderings; byte-stable for fixed inputs.
// Comparison columns: variant t p df n (n = the variant's sample count).
std::string comparison_tsv(const std::vector<std::pair<Variant, TTestResult>>& comparisons);
// Raw trial columns: instance variant seed Z emissions ghg_ok.
std::string trials_tsv(const TrialTable& table);

}  // namespace fctp

#endif  // FCTP_STATS_HPP
