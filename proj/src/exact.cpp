#include "fctp/exact.hpp"

#include <vector>

namespace fctp {

namespace {

constexpr double kEnumerationBudget = 1e7;

Solution assignment_to_solution(const Instance& instance, const std::vector<std::size_t>& map) {
  Solution sol{Matrix(instance.center_count(), instance.customer_count(), 0.0)};
  for (std::size_t j = 0; j < map.size(); ++j)
    sol.flow(map[j], j) = instance.customers[j].demand;
  return sol;
}

}  // namespace

OracleResult brute_force_optimum(const Instance& instance, const EmissionParams& params,
                                 GhgMode mode, bool enforce_ghg_cap) {
  const auto report = validate_instance(instance);
  if (!report.ok)
    throw std::invalid_argument("invalid instance: " + report.violations.front().message);

  const std::size_t m = instance.center_count();
  const std::size_t n = instance.customer_count();

  double combinations = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    combinations *= static_cast<double>(m);
    if (combinations > kEnumerationBudget)
      throw BudgetExceeded("m^n exceeds the enumeration budget of 1e7");
  }

  // Odometer over assignment vectors, customer 0 most significant; the first
  // strictly-better solution wins, so ties resolve to the lexicographically
  // smallest assignment.
  std::vector<std::size_t> assign(n, 0);
  std::vector<double> load(m);
  std::vector<std::size_t> best_assign;
  double best_total = 0.0;
  bool found = false;

  for (;;) {
    load.assign(m, 0.0);
    for (std::size_t j = 0; j < n; ++j) load[assign[j]] += instance.customers[j].demand;
    bool fits = true;
    for (std::size_t i = 0; i < m; ++i)
      if (load[i] > instance.centers[i].capacity) {
        fits = false;
        break;
      }

    if (fits) {
      double transport = 0.0;
      double fixed = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        transport += instance.centers[i].unit_transport_cost * load[i];
        if (load[i] > 0.0) fixed += instance.centers[i].opening_cost;
      }
      for (std::size_t j = 0; j < n; ++j) {
        const double b = instance.customers[j].demand;
        if (b > 0.0) {
          transport += instance.edge_unit_cost(assign[j], j) * b;
          fixed += instance.edge_fixed_cost(assign[j], j);
        }
      }
      const double total = transport + fixed;

      bool admissible = true;
      if (enforce_ghg_cap) {
        const Solution sol = assignment_to_solution(instance, assign);
        admissible = ghg_emissions(instance, params, sol, mode) <= params.ghg_cap;
      }
      if (admissible && (!found || total < best_total)) {
        best_total = total;
        best_assign = assign;
        found = true;
      }
    }

    std::size_t j = n;
    while (j > 0) {
      --j;
      if (++assign[j] < m) break;
      assign[j] = 0;
      if (j == 0) goto done;
    }
    if (n == 0) break;
  }
done:

  if (!found)
    throw NoFeasibleAssignment(enforce_ghg_cap
                                   ? "no unsplit assignment fits the capacities and the GHG cap"
                                   : "no unsplit assignment fits the capacities");

  OracleResult result;
  result.solution = assignment_to_solution(instance, best_assign);
  result.cost = total_cost(instance, result.solution);
  return result;
}

}  // namespace fctp
