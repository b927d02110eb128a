#include "fctp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fctp/rng.hpp"

namespace fctp {

namespace {

double mean(std::span<const double> xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

// Unbiased sample variance.
double variance(std::span<const double> xs, double mu) {
  double s = 0.0;
  for (double x : xs) s += (x - mu) * (x - mu);
  return s / static_cast<double>(xs.size() - 1);
}

// Continued fraction for the incomplete beta, modified Lentz.
double beta_cf(double a, double b, double x) {
  constexpr int kMaxIter = 500;
  constexpr double kEps = 1e-15;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) return h;
  }
  return h;  // converged enough for any df we see
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
  return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

namespace {

double two_tailed_p(double t, double df) {
  if (t == 0.0) return 1.0;
  const double x = df / (df + t * t);
  return regularized_incomplete_beta(df / 2.0, 0.5, x);
}

}  // namespace

TTestResult unpaired_t_test(std::span<const double> sample_a, std::span<const double> sample_b,
                            TTestKind kind) {
  if (sample_a.size() < 2 || sample_b.size() < 2)
    throw std::invalid_argument("each sample needs at least two values");

  const auto na = static_cast<double>(sample_a.size());
  const auto nb = static_cast<double>(sample_b.size());
  const double ma = mean(sample_a);
  const double mb = mean(sample_b);
  const double va = variance(sample_a, ma);
  const double vb = variance(sample_b, mb);

  TTestResult r;
  r.n_a = sample_a.size();
  r.n_b = sample_b.size();

  if (va == 0.0 && vb == 0.0) {
    if (ma != mb)
      throw std::invalid_argument("both samples have zero variance and different means");
    r.t = 0.0;
    r.p = 1.0;
    r.df = na + nb - 2.0;
    return r;
  }

  double se;
  if (kind == TTestKind::student) {
    const double pooled = ((na - 1.0) * va + (nb - 1.0) * vb) / (na + nb - 2.0);
    se = std::sqrt(pooled * (1.0 / na + 1.0 / nb));
    r.df = na + nb - 2.0;
  } else {
    const double qa = va / na;
    const double qb = vb / nb;
    se = std::sqrt(qa + qb);
    r.df = (qa + qb) * (qa + qb) /
           (qa * qa / (na - 1.0) + qb * qb / (nb - 1.0));
  }

  r.t = (ma - mb) / se;
  r.p = two_tailed_p(r.t, r.df);
  return r;
}

std::uint64_t trial_seed(std::uint64_t base_seed, const std::string& instance_id,
                         Variant variant, int trial) {
  std::string key = instance_id;
  key.push_back('\x1f');
  key += variant_name(variant);
  key.push_back('\x1f');
  key += std::to_string(trial);
  Rng mix(base_seed ^ fnv1a64(key));
  return mix.next_u64();
}

TrialTable run_experiment(std::span<const GeneratedInstance> instances, GhgMode mode,
                          std::span<const Variant> variants, int trials_per_variant,
                          std::uint64_t base_seed) {
  if (trials_per_variant < 1) throw std::invalid_argument("trials_per_variant must be >= 1");
  TrialTable table;
  for (const auto& gi : instances) {
    for (Variant v : variants) {
      const int trials = v == Variant::nn ? 1 : trials_per_variant;
      for (int k = 0; k < trials; ++k) {
        const std::uint64_t seed = trial_seed(base_seed, gi.id, v, k);
        const SolveResult res = construct_solution(gi.instance, gi.params, mode, v, seed);
        table.rows.push_back({gi.id, v, seed, res.cost.total, res.emissions,
                              res.feasibility.ghg_ok});
      }
    }
  }
  return table;
}

std::vector<std::pair<Variant, TTestResult>> compare_vs_baseline(const TrialTable& table,
                                                                 Variant baseline,
                                                                 Metric metric) {
  auto metric_of = [metric](const TrialRow& row) {
    return metric == Metric::cost ? row.cost : row.emissions;
  };

  std::vector<double> base_sample;
  std::vector<Variant> order;
  for (const auto& row : table.rows) {
    if (row.variant == baseline) base_sample.push_back(metric_of(row));
    else if (std::find(order.begin(), order.end(), row.variant) == order.end())
      order.push_back(row.variant);
  }
  if (base_sample.empty()) throw std::invalid_argument("baseline variant missing from table");

  std::vector<std::pair<Variant, TTestResult>> out;
  for (Variant v : order) {
    std::vector<double> sample;
    for (const auto& row : table.rows)
      if (row.variant == v) sample.push_back(metric_of(row));
    out.emplace_back(v, unpaired_t_test(sample, base_sample));
  }
  return out;
}

std::string comparison_tsv(const std::vector<std::pair<Variant, TTestResult>>& comparisons) {
  std::string out = "variant\tt\tp\tdf\tn\n";
  for (const auto& [variant, r] : comparisons) {
    out += variant_name(variant);
    out += "\t" + format_value(r.t);
    out += "\t" + format_value(r.p);
    out += "\t" + format_value(r.df);
    out += "\t" + std::to_string(r.n_a);
    out += "\n";
  }
  return out;
}

std::string trials_tsv(const TrialTable& table) {
  std::string out = "instance\tvariant\tseed\tZ\temissions\tghg_ok\n";
  for (const auto& row : table.rows) {
    out += row.instance_id;
    out += "\t";
    out += variant_name(row.variant);
    out += "\t" + std::to_string(row.seed);
    out += "\t" + format_value(row.cost);
    out += "\t" + format_value(row.emissions);
    out += "\t";
    out += row.ghg_ok ? "1" : "0";
    out += "\n";
  }
  return out;
}

}  // namespace fctp
