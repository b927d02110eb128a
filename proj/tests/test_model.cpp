#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "fctp/model.hpp"
#include "helpers.hpp"

using namespace fctp;
using test_helpers::canonical_1x1_text;

namespace {

Instance all_zero_instance() {
  Instance inst;
  inst.centers = {{0.0, 0.0, 0.0}};
  inst.customers = {{0.0}};
  inst.edge_fixed_cost = Matrix(1, 1, 0.0);
  inst.edge_unit_cost = Matrix(1, 1, 0.0);
  return inst;
}

}  // namespace

TEST_CASE("all-zero 1x1 instance is valid") {
  const auto report = validate_instance(all_zero_instance());
  CHECK(report.ok);
  CHECK(report.violations.empty());
}

TEST_CASE("capacity shortfall is reported") {
  Instance inst;
  inst.centers = {{5.0, 1.0, 1.0}};
  inst.customers = {{4.0}, {6.0}};
  inst.edge_fixed_cost = Matrix(1, 2, 0.0);
  inst.edge_unit_cost = Matrix(1, 2, 0.0);

  const auto report = validate_instance(inst);
  REQUIRE_FALSE(report.ok);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].kind == ViolationKind::capacity_shortfall);
}

TEST_CASE("negative cost entry is located") {
  Instance inst;
  inst.centers.assign(3, {10.0, 1.0, 1.0});
  inst.customers.assign(3, {1.0});
  inst.edge_fixed_cost = Matrix(3, 3, 0.0);
  inst.edge_unit_cost = Matrix(3, 3, 0.0);
  inst.edge_unit_cost(1, 2) = -1.0;  // c_23 in 1-based math notation

  const auto report = validate_instance(inst);
  REQUIRE_FALSE(report.ok);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].kind == ViolationKind::negative_value);
  CHECK(report.violations[0].location == "cost(2,3)");
}

TEST_CASE("shape mismatch is reported") {
  Instance inst;
  inst.centers = {{10.0, 1.0, 1.0}};
  inst.customers = {{1.0}, {2.0}};
  inst.edge_fixed_cost = Matrix(1, 2, 0.0);
  inst.edge_unit_cost = Matrix(2, 2, 0.0);  // wrong row count

  const auto report = validate_instance(inst);
  REQUIRE_FALSE(report.ok);
  CHECK(report.violations[0].kind == ViolationKind::shape_mismatch);
  CHECK(report.violations[0].location == "cost");
}

TEST_CASE("single negative mutation yields exactly one violation") {
  Rng rng(20240601);
  for (int round = 0; round < 40; ++round) {
    Instance inst = test_helpers::random_instance(rng, 3, 4);
    // Give every field slack so the only violation is the one we plant.
    const std::size_t slot = rng.next_index(7);
    switch (slot) {
      case 0: inst.centers[rng.next_index(3)].opening_cost = -2.0; break;
      case 1: inst.centers[rng.next_index(3)].unit_transport_cost = -2.0; break;
      case 2: inst.customers[rng.next_index(4)].demand = -2.0; break;
      case 3: inst.edge_fixed_cost(rng.next_index(3), rng.next_index(4)) = -2.0; break;
      case 4: inst.edge_unit_cost(rng.next_index(3), rng.next_index(4)) = -2.0; break;
      case 5: inst.centers[rng.next_index(3)].capacity = -2.0; break;
      default: inst.customers[rng.next_index(4)].demand = -5.0; break;
    }
    const auto report = validate_instance(inst);
    REQUIRE_FALSE(report.ok);
    std::size_t negatives = 0;
    for (const auto& v : report.violations)
      if (v.kind == ViolationKind::negative_value) ++negatives;
    CHECK(negatives == 1);
  }
}

TEST_CASE("canonical 1x1 file parses") {
  const auto parsed = parse_instance(std::string(canonical_1x1_text()));
  REQUIRE(parsed.instance.center_count() == 1);
  REQUIRE(parsed.instance.customer_count() == 1);
  CHECK(parsed.instance.centers[0].capacity == 10.0);
  CHECK(parsed.instance.centers[0].opening_cost == 5.0);
  CHECK(parsed.instance.centers[0].unit_transport_cost == 2.0);
  CHECK(parsed.instance.customers[0].demand == 10.0);
  CHECK(parsed.instance.edge_fixed_cost(0, 0) == 3.0);
  CHECK(parsed.instance.edge_unit_cost(0, 0) == 4.0);
  CHECK(parsed.params.alpha_manufacturer == 0.02);
  CHECK(parsed.params.alpha_center == std::vector<double>{0.02});
  CHECK(parsed.params.beta_manufacturer == std::vector<double>{0.04});
  CHECK(parsed.params.beta_edge(0, 0) == 0.04);
  CHECK(parsed.params.ghg_cap == 150000.0);
}

TEST_CASE("serialize emits the canonical text") {
  const auto parsed = parse_instance(std::string(canonical_1x1_text()));
  CHECK(serialize_instance(parsed.instance, parsed.params) == canonical_1x1_text());
}

TEST_CASE("comments and odd whitespace canonicalize to the same bytes") {
  std::string messy =
      "# generated by hand\n"
      "fctp 1\n"
      "\n"
      "  1   1\n"
      "capacity:  10   # one center\n"
      "opening: 5\n"
      "unitcost: 2\n"
      "demand: 10\n"
      "fixed:\n"
      " 3 \n"
      "cost:\n"
      "4\n"
      "emissions: 0.02 0.02 0.04 0.04 150000\n";
  const auto parsed = parse_instance(messy);
  CHECK(serialize_instance(parsed.instance, parsed.params) == canonical_1x1_text());
}

TEST_CASE("parse then serialize round-trips random instances") {
  Rng rng(7);
  for (int round = 0; round < 25; ++round) {
    const std::size_t m = 1 + rng.next_index(5);
    const std::size_t n = 1 + rng.next_index(6);
    Instance inst = test_helpers::random_instance(rng, m, n);
    // Fractional values exercise the shortest-round-trip formatting.
    inst.edge_unit_cost(0, 0) = rng.next_double() * 10.0;
    inst.centers[0].capacity += 0.125;
    const auto params =
        EmissionParams::uniform(rng.next_double(), rng.next_double(), rng.next_double(),
                                rng.next_double(), 1.0 + rng.next_double() * 1e6, m, n);

    const std::string text = serialize_instance(inst, params);
    const auto parsed = parse_instance(text);

    CHECK(parsed.instance.edge_fixed_cost == inst.edge_fixed_cost);
    CHECK(parsed.instance.edge_unit_cost == inst.edge_unit_cost);
    REQUIRE(parsed.instance.center_count() == m);
    REQUIRE(parsed.instance.customer_count() == n);
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(parsed.instance.centers[i].capacity == inst.centers[i].capacity);
      CHECK(parsed.instance.centers[i].opening_cost == inst.centers[i].opening_cost);
      CHECK(parsed.instance.centers[i].unit_transport_cost ==
            inst.centers[i].unit_transport_cost);
    }
    for (std::size_t j = 0; j < n; ++j)
      CHECK(parsed.instance.customers[j].demand == inst.customers[j].demand);
    CHECK(parsed.params.alpha_manufacturer == params.alpha_manufacturer);
    CHECK(parsed.params.alpha_center == params.alpha_center);
    CHECK(parsed.params.beta_manufacturer == params.beta_manufacturer);
    CHECK(parsed.params.beta_edge == params.beta_edge);
    CHECK(parsed.params.ghg_cap == params.ghg_cap);
    // And serializing again reproduces the bytes.
    CHECK(serialize_instance(parsed.instance, parsed.params) == text);
  }
}

TEST_CASE("matrix row with the wrong width reports its line") {
  std::string text =
      "fctp 1\n"
      "2 3\n"
      "capacity: 10 10\n"
      "opening: 1 1\n"
      "unitcost: 1 1\n"
      "demand: 2 2 2\n"
      "fixed:\n"
      "1 2 3\n"
      "4 5\n"  // line 9: only two values
      "cost:\n"
      "1 1 1\n"
      "1 1 1\n"
      "emissions: 0.02 0.02 0.04 0.04 150000\n";
  try {
    parse_instance(text);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 9);
    CHECK(std::string(e.what()).find("row 2") != std::string::npos);
  }
}

TEST_CASE("parser rejects malformed input with line numbers") {
  CHECK_THROWS_AS(parse_instance(std::string("")), ParseError);
  CHECK_THROWS_AS(parse_instance(std::string("fctp 2\n1 1\n")), ParseError);
  CHECK_THROWS_AS(parse_instance(std::string("hello\n")), ParseError);

  // Non-numeric token inside a vector line.
  std::string bad_token = canonical_1x1_text();
  const auto pos = bad_token.find("demand: 10");
  bad_token.replace(pos, 10, "demand: xy");
  try {
    parse_instance(bad_token);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 6);
  }

  // Truncated file.
  std::string truncated =
      "fctp 1\n"
      "1 1\n"
      "capacity: 10\n";
  CHECK_THROWS_AS(parse_instance(truncated), ParseError);

  // Emission factors must be nonnegative, the cap positive.
  std::string bad_factor = canonical_1x1_text();
  bad_factor.replace(bad_factor.find("emissions: 0.02"), 15, "emissions: -0.1");
  CHECK_THROWS_AS(parse_instance(bad_factor), ParseError);
  std::string bad_cap = canonical_1x1_text();
  bad_cap.replace(bad_cap.find("150000"), 6, "0");
  CHECK_THROWS_AS(parse_instance(bad_cap), ParseError);
}

TEST_CASE("non-uniform emission params refuse to serialize") {
  const auto parsed = parse_instance(std::string(canonical_1x1_text()));
  Instance two = parsed.instance;
  two.centers.push_back({5.0, 1.0, 1.0});
  two.edge_fixed_cost = Matrix(2, 1, 3.0);
  two.edge_unit_cost = Matrix(2, 1, 4.0);
  auto params = EmissionParams::uniform(0.02, 0.02, 0.04, 0.04, 150000, 2, 1);
  params.alpha_center[1] = 0.05;
  CHECK_THROWS_AS(serialize_instance(two, params), std::invalid_argument);
}

TEST_CASE("solution text round-trips") {
  Solution sol{Matrix(2, 3, 0.0)};
  sol.flow(0, 0) = 1.5;
  sol.flow(1, 2) = 4.0;
  const std::string text = serialize_solution(sol);
  CHECK(text == "2 3\n1.5 0 0\n0 0 4\n");
  const Solution back = parse_solution(text);
  CHECK(back.flow == sol.flow);

  CHECK_THROWS_AS(parse_solution(std::string("2 3\n1 2 3\n")), ParseError);
  CHECK_THROWS_AS(parse_solution(std::string("2 3\n1 2 3\n1 2\n")), ParseError);
}

TEST_CASE("format_value emits shortest round-trip forms") {
  CHECK(format_value(10.0) == "10");
  CHECK(format_value(0.02) == "0.02");
  CHECK(format_value(150000.0) == "150000");
  CHECK(format_value(46.5) == "46.5");
}
