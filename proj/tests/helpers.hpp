#ifndef FCTP_TESTS_HELPERS_HPP
#define FCTP_TESTS_HELPERS_HPP

// Shared fixtures: the canonical 1x1 file, the worked two-center shipment
// set (three centers, six effective edges, one split demand), and small
// random instance builders.

#include <cmath>
#include <string>

#include "fctp/model.hpp"
#include "fctp/rng.hpp"

namespace fctp::test_helpers {

inline const char* canonical_1x1_text() {
  return
      "fctp 1\n"
      "1 1\n"
      "capacity: 10\n"
      "opening: 5\n"
      "unitcost: 2\n"
      "demand: 10\n"
      "fixed:\n"
      "3\n"
      "cost:\n"
      "4\n"
      "emissions: 0.02 0.02 0.04 0.04 150000\n";
}

inline Instance canonical_1x1_instance() {
  Instance inst;
  inst.centers = {{10.0, 5.0, 2.0}};
  inst.customers = {{10.0}};
  inst.edge_fixed_cost = Matrix(1, 1, 3.0);
  inst.edge_unit_cost = Matrix(1, 1, 4.0);
  return inst;
}

struct WorkedExample {
  Instance instance;
  EmissionParams params;
  Solution solution;
};

// The worked shipment set: centers 2 and 3 ship 150 and 200 units at
// stage-1 unit cost 3; stage-2 (cost, quantity) pairs are (3,50), (1,100),
// (2,25), (5,25), (3,100), (4,50). Center 1 stays closed.
inline WorkedExample worked_example(double alpha, double beta, double cap) {
  WorkedExample ex;
  Instance& inst = ex.instance;
  inst.centers = {{400.0, 0.0, 3.0}, {150.0, 0.0, 3.0}, {200.0, 0.0, 3.0}};
  inst.customers = {{50.0}, {100.0}, {25.0}, {25.0}, {100.0}, {50.0}};
  inst.edge_fixed_cost = Matrix(3, 6, 0.0);
  inst.edge_unit_cost = Matrix(3, 6, 9.0);
  inst.edge_unit_cost(1, 0) = 3.0;
  inst.edge_unit_cost(1, 1) = 1.0;
  inst.edge_unit_cost(2, 2) = 2.0;
  inst.edge_unit_cost(2, 3) = 5.0;
  inst.edge_unit_cost(2, 4) = 3.0;
  inst.edge_unit_cost(2, 5) = 4.0;

  ex.params = EmissionParams::uniform(alpha, alpha, beta, beta, cap, 3, 6);

  ex.solution.flow = Matrix(3, 6, 0.0);
  ex.solution.flow(1, 0) = 50.0;
  ex.solution.flow(1, 1) = 100.0;
  ex.solution.flow(2, 2) = 25.0;
  ex.solution.flow(2, 3) = 25.0;
  ex.solution.flow(2, 4) = 100.0;
  ex.solution.flow(2, 5) = 50.0;
  return ex;
}

// Valid instance with integer data; total capacity >= total demand.
inline Instance random_instance(Rng& rng, std::size_t m, std::size_t n) {
  Instance inst;
  inst.customers.resize(n);
  double total_demand = 0.0;
  for (auto& c : inst.customers) {
    c.demand = static_cast<double>(1 + rng.next_index(99));
    total_demand += c.demand;
  }
  inst.centers.resize(m);
  for (auto& c : inst.centers) {
    c.capacity = std::ceil(total_demand / static_cast<double>(m)) +
                 static_cast<double>(rng.next_index(50));
    c.opening_cost = static_cast<double>(rng.next_index(400));
    c.unit_transport_cost = static_cast<double>(1 + rng.next_index(9));
  }
  inst.edge_fixed_cost = Matrix(m, n);
  inst.edge_unit_cost = Matrix(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      inst.edge_fixed_cost(i, j) = static_cast<double>(rng.next_index(150));
      inst.edge_unit_cost(i, j) = static_cast<double>(1 + rng.next_index(9));
    }
  return inst;
}

// Every center alone covers all demand, so the unsplit optimum is the true
// optimum.
inline Instance slack_instance(Rng& rng, std::size_t m, std::size_t n) {
  Instance inst = random_instance(rng, m, n);
  const double total = inst.total_demand();
  for (auto& c : inst.centers) c.capacity = total;
  return inst;
}

// Arbitrary nonnegative flow, not necessarily demand-feasible.
inline Solution random_flow(Rng& rng, std::size_t m, std::size_t n) {
  Solution sol{Matrix(m, n)};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      sol.flow(i, j) = rng.next_index(4) == 0 ? 0.0 : rng.next_double() * 50.0;
  return sol;
}

inline EmissionParams random_params(Rng& rng, std::size_t m, std::size_t n) {
  EmissionParams p = EmissionParams::uniform(rng.next_double(), rng.next_double(),
                                             rng.next_double(), rng.next_double(), 1000.0, m, n);
  return p;
}

}  // namespace fctp::test_helpers

#endif  // FCTP_TESTS_HELPERS_HPP
