#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "fctp/stats.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace fctp;
using test_oracles::textbook_t_test;

namespace {

std::vector<double> random_sample(Rng& rng, std::size_t n, double shift) {
  std::vector<double> out(n);
  for (auto& x : out) x = shift + rng.next_double() * 10.0;
  return out;
}

}  // namespace

TEST_CASE("identical samples give t = 0, p = 1") {
  const std::vector<double> a = {3.0, 5.0, 7.0, 9.0};
  const auto r = unpaired_t_test(a, a);
  CHECK(r.t == 0.0);
  CHECK(r.p == 1.0);
  CHECK(r.df == 6.0);
}

TEST_CASE("the frozen example: [1..5] vs [2..6]") {
  const std::vector<double> a = {1, 2, 3, 4, 5};
  const std::vector<double> b = {2, 3, 4, 5, 6};
  const auto r = unpaired_t_test(a, b);
  CHECK(r.t == -1.0);  // means 3 and 4, pooled variance 2.5, se 1
  CHECK(r.df == 8.0);

  const auto oracle = textbook_t_test(a, b);
  CHECK(r.t == doctest::Approx(oracle.t).epsilon(1e-12));
  CHECK(r.p == doctest::Approx(oracle.p).epsilon(1e-9));
  // Value frozen from the integration oracle.
  CHECK(r.p == doctest::Approx(0.34659350708733416).epsilon(1e-9));
}

TEST_CASE("swapping the samples negates t and keeps p") {
  Rng rng(1234);
  for (int round = 0; round < 100; ++round) {
    const auto a = random_sample(rng, 3 + rng.next_index(10), 0.0);
    const auto b = random_sample(rng, 3 + rng.next_index(10), rng.next_double());
    const auto ab = unpaired_t_test(a, b);
    const auto ba = unpaired_t_test(b, a);
    CHECK(ab.t == -ba.t);
    CHECK(ab.p == ba.p);
    CHECK(ab.p > 0.0);
    CHECK(ab.p <= 1.0);
    CHECK(std::isfinite(ab.t));
  }
}

TEST_CASE("t-test matches the textbook oracle on random pairs") {
  Rng rng(987);
  for (int round = 0; round < 20; ++round) {
    const auto a = random_sample(rng, 4 + rng.next_index(20), 0.0);
    const auto b = random_sample(rng, 4 + rng.next_index(20), rng.next_double() * 3.0);
    const auto r = unpaired_t_test(a, b);
    const auto oracle = textbook_t_test(a, b);
    CHECK(r.t == doctest::Approx(oracle.t).epsilon(1e-9));
    CHECK(r.p == doctest::Approx(oracle.p).epsilon(1e-9));
    CHECK(r.df == oracle.df);
  }
}

TEST_CASE("shifting or scaling both samples leaves t and p unchanged") {
  Rng rng(555);
  for (int round = 0; round < 100; ++round) {
    const auto a = random_sample(rng, 5 + rng.next_index(8), 0.0);
    const auto b = random_sample(rng, 5 + rng.next_index(8), 1.0);
    const auto base = unpaired_t_test(a, b);

    const double shift = rng.next_double() * 100.0 - 50.0;
    const double scale = 0.5 + rng.next_double() * 4.0;
    std::vector<double> a2 = a;
    std::vector<double> b2 = b;
    for (auto& x : a2) x += shift;
    for (auto& x : b2) x += shift;
    const auto shifted = unpaired_t_test(a2, b2);
    CHECK(shifted.t == doctest::Approx(base.t).epsilon(1e-9));
    CHECK(shifted.p == doctest::Approx(base.p).epsilon(1e-9));

    a2 = a;
    b2 = b;
    for (auto& x : a2) x *= scale;
    for (auto& x : b2) x *= scale;
    const auto scaled = unpaired_t_test(a2, b2);
    CHECK(scaled.t == doctest::Approx(base.t).epsilon(1e-9));
    CHECK(scaled.p == doctest::Approx(base.p).epsilon(1e-9));
  }
}

TEST_CASE("p-values agree with the published critical points for df = 8") {
  // Two-tailed critical values: t(0.05) = 2.306, t(0.10) = 1.860, t(0.01) = 3.355.
  auto p_of = [](double t) {
    return regularized_incomplete_beta(4.0, 0.5, 8.0 / (8.0 + t * t));
  };
  CHECK(p_of(2.306) == doctest::Approx(0.05).epsilon(5e-4));
  CHECK(p_of(1.860) == doctest::Approx(0.10).epsilon(5e-4));
  CHECK(p_of(3.355) == doctest::Approx(0.01).epsilon(5e-4));
}

TEST_CASE("degenerate inputs") {
  const std::vector<double> constant = {4.0, 4.0, 4.0};
  const std::vector<double> other_constant = {5.0, 5.0, 5.0};
  const std::vector<double> one = {1.0};

  SUBCASE("zero variance, equal means") {
    const auto r = unpaired_t_test(constant, constant);
    CHECK(r.t == 0.0);
    CHECK(r.p == 1.0);
  }
  SUBCASE("zero variance, different means") {
    CHECK_THROWS_AS(unpaired_t_test(constant, other_constant), std::invalid_argument);
  }
  SUBCASE("samples too small") {
    CHECK_THROWS_AS(unpaired_t_test(one, constant), std::invalid_argument);
    CHECK_THROWS_AS(unpaired_t_test(constant, one), std::invalid_argument);
  }
}

TEST_CASE("welch variant reduces the degrees of freedom") {
  const std::vector<double> a = {1.0, 2.0, 3.0, 4.0, 5.0};
  const std::vector<double> b = {10.0, 30.0, 50.0, 20.0, 40.0};
  const auto student = unpaired_t_test(a, b, TTestKind::student);
  const auto welch = unpaired_t_test(a, b, TTestKind::welch);
  CHECK(welch.df < student.df);
  CHECK(welch.p > 0.0);
  CHECK(welch.p <= 1.0);
}

TEST_CASE("trial seeds are stable and spread") {
  const auto s1 = trial_seed(1, "small_0", Variant::dx, 0);
  CHECK(s1 == trial_seed(1, "small_0", Variant::dx, 0));
  CHECK(s1 != trial_seed(2, "small_0", Variant::dx, 0));
  CHECK(s1 != trial_seed(1, "small_1", Variant::dx, 0));
  CHECK(s1 != trial_seed(1, "small_0", Variant::dy10, 0));
  CHECK(s1 != trial_seed(1, "small_0", Variant::dx, 1));
}

namespace {

std::vector<GeneratedInstance> tiny_family() {
  GenSpec spec;
  spec.m = 3;
  spec.n = 4;
  spec.seed = 5;
  std::vector<GeneratedInstance> out;
  out.push_back(generate_instance(spec));
  spec.seed = 6;
  out.push_back(generate_instance(spec));
  return out;
}

}  // namespace

TEST_CASE("nn collapses to one trial per instance") {
  const auto family = tiny_family();
  const Variant only_nn[] = {Variant::nn};
  const auto table = run_experiment(family, GhgMode::example, only_nn, 30, 99);
  CHECK(table.rows.size() == 2);  // one per instance despite 30 requested trials
}

TEST_CASE("experiments are deterministic") {
  const auto family = tiny_family();
  const auto table1 = run_experiment(family, GhgMode::example, kAllVariants, 5, 7);
  const auto table2 = run_experiment(family, GhgMode::example, kAllVariants, 5, 7);
  REQUIRE(table1.rows.size() == table2.rows.size());
  CHECK(trials_tsv(table1) == trials_tsv(table2));
  CHECK(table1.rows.size() == 2 * (1 + 4 * 5));
}

TEST_CASE("trial rows reproduce from their recorded seeds") {
  const auto family = tiny_family();
  const auto table = run_experiment(family, GhgMode::example, kAllVariants, 3, 17);
  for (const auto& row : table.rows) {
    const auto& gi = row.instance_id == family[0].id ? family[0] : family[1];
    const auto res =
        construct_solution(gi.instance, gi.params, GhgMode::example, row.variant, row.seed);
    CHECK(res.cost.total == row.cost);
    CHECK(res.emissions == row.emissions);
    CHECK(res.feasibility.ghg_ok == row.ghg_ok);
  }
}

TEST_CASE("comparison against the baseline") {
  const auto family = tiny_family();

  SUBCASE("baseline-only table yields no comparisons") {
    const Variant only_base[] = {Variant::dy10};
    const auto table = run_experiment(family, GhgMode::example, only_base, 4, 3);
    CHECK(compare_vs_baseline(table, Variant::dy10, Metric::cost).empty());
  }
  SUBCASE("missing baseline is an error") {
    const Variant only_nn[] = {Variant::nn};
    const auto table = run_experiment(family, GhgMode::example, only_nn, 4, 3);
    CHECK_THROWS_AS(compare_vs_baseline(table, Variant::dy10, Metric::cost),
                    std::invalid_argument);
  }
  SUBCASE("full run yields one row per non-baseline variant") {
    const auto table = run_experiment(family, GhgMode::example, kAllVariants, 10, 3);
    for (Metric metric : {Metric::cost, Metric::emissions}) {
      const auto rows = compare_vs_baseline(table, Variant::dy10, metric);
      REQUIRE(rows.size() == 4);
      for (const auto& [variant, r] : rows) {
        CHECK(variant != Variant::dy10);
        CHECK(r.p > 0.0);
        CHECK(r.p <= 1.0);
        CHECK(std::isfinite(r.t));
      }
    }
  }
  SUBCASE("a variant identical to the baseline tests at t = 0, p = 1") {
    TrialTable table;
    for (int k = 0; k < 5; ++k) {
      table.rows.push_back({"i", Variant::dy10, 0, 10.0 + k, 1.0 + k, true});
      table.rows.push_back({"i", Variant::dx, 0, 10.0 + k, 1.0 + k, true});
    }
    const auto rows = compare_vs_baseline(table, Variant::dy10, Metric::cost);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].second.t == 0.0);
    CHECK(rows[0].second.p == 1.0);
  }
}

TEST_CASE("tsv renderings are stable and well formed") {
  const auto family = tiny_family();
  const auto table = run_experiment(family, GhgMode::example, kAllVariants, 4, 21);
  const auto comparisons = compare_vs_baseline(table, Variant::dy10, Metric::emissions);

  const std::string tsv = comparison_tsv(comparisons);
  CHECK(tsv.substr(0, tsv.find('\n')) == "variant\tt\tp\tdf\tn");
  CHECK(std::count(tsv.begin(), tsv.end(), '\n') == 5);  // header + 4 variants

  const std::string raw = trials_tsv(table);
  CHECK(raw.substr(0, raw.find('\n')) == "instance\tvariant\tseed\tZ\temissions\tghg_ok");
  CHECK(std::count(raw.begin(), raw.end(), '\n') ==
        static_cast<std::ptrdiff_t>(table.rows.size()) + 1);
}
