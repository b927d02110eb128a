#include "fctp/evaluator.hpp"

#include <cmath>
#include <stdexcept>

namespace fctp {

namespace {

void require_shape(const Instance& instance, const Solution& solution) {
  if (solution.flow.rows() != instance.center_count() ||
      solution.flow.cols() != instance.customer_count())
    throw std::invalid_argument(
        "flow matrix is " + std::to_string(solution.flow.rows()) + "x" +
        std::to_string(solution.flow.cols()) + ", instance is " +
        std::to_string(instance.center_count()) + "x" +
        std::to_string(instance.customer_count()));
}

void require_shape(const Instance& instance, const EmissionParams& params) {
  const std::size_t m = instance.center_count();
  const std::size_t n = instance.customer_count();
  if (params.alpha_center.size() != m || params.beta_manufacturer.size() != m ||
      params.beta_edge.rows() != m || params.beta_edge.cols() != n)
    throw std::invalid_argument("emission params do not match instance dimensions");
}

}  // namespace

std::vector<double> stage1_flows(const Solution& solution) {
  const Matrix& x = solution.flow;
  std::vector<double> out(x.rows(), 0.0);
  for (std::size_t i = 0; i < x.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < x.cols(); ++j) s += x(i, j);
    out[i] = s;
  }
  return out;
}

Indicators indicators(const Solution& solution) {
  const Matrix& x = solution.flow;
  Indicators ind;
  ind.center_open.assign(x.rows(), false);
  ind.edge_used.assign(x.rows(), std::vector<bool>(x.cols(), false));
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (x(i, j) > 0.0) {
        ind.edge_used[i][j] = true;
        ind.center_open[i] = true;
      }
  return ind;
}

CostBreakdown total_cost(const Instance& instance, const Solution& solution) {
  require_shape(instance, solution);
  const Matrix& x = solution.flow;
  const std::size_t m = x.rows();
  const std::size_t n = x.cols();
  const auto xi = stage1_flows(solution);

  CostBreakdown cb;
  for (std::size_t i = 0; i < m; ++i)
    cb.transport += instance.centers[i].unit_transport_cost * xi[i];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) cb.transport += instance.edge_unit_cost(i, j) * x(i, j);

  for (std::size_t i = 0; i < m; ++i)
    if (xi[i] > 0.0) cb.fixed += instance.centers[i].opening_cost;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (x(i, j) > 0.0) cb.fixed += instance.edge_fixed_cost(i, j);

  cb.total = cb.transport + cb.fixed;
  return cb;
}

double ghg_emissions(const Instance& instance, const EmissionParams& params,
                     const Solution& solution, GhgMode mode) {
  require_shape(instance, solution);
  require_shape(instance, params);
  const Matrix& x = solution.flow;
  const std::size_t m = x.rows();
  const std::size_t n = x.cols();
  const auto xi = stage1_flows(solution);

  double total = 0.0;
  if (mode == GhgMode::example) {
    for (std::size_t i = 0; i < m; ++i)
      total += params.alpha_manufacturer * xi[i] +
               params.beta_manufacturer[i] * instance.centers[i].unit_transport_cost * xi[i];
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        total += params.alpha_center[i] * x(i, j) +
                 params.beta_edge(i, j) * instance.edge_unit_cost(i, j) * x(i, j);
  } else {
    for (std::size_t i = 0; i < m; ++i)
      total += params.alpha_manufacturer * instance.centers[i].capacity * xi[i];
    for (std::size_t i = 0; i < m; ++i)
      total += params.beta_manufacturer[i] * instance.centers[i].capacity *
               instance.centers[i].unit_transport_cost * xi[i];
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        total += params.alpha_center[i] * instance.customers[j].demand * x(i, j);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        total += params.beta_edge(i, j) * instance.customers[j].demand *
                 instance.edge_unit_cost(i, j) * x(i, j);
  }
  return total;
}

FeasibilityReport check_feasibility(const Instance& instance, const EmissionParams& params,
                                    const Solution& solution, GhgMode mode) {
  require_shape(instance, solution);
  const Matrix& x = solution.flow;
  const std::size_t m = x.rows();
  const std::size_t n = x.cols();

  FeasibilityReport rep;
  rep.nonneg_ok = true;
  for (std::size_t i = 0; i < m && rep.nonneg_ok; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(x(i, j) >= 0.0)) {
        rep.nonneg_ok = false;
        break;
      }

  const auto xi = stage1_flows(solution);
  rep.capacity_ok = true;
  for (std::size_t i = 0; i < m; ++i)
    if (xi[i] > instance.centers[i].capacity) {
      rep.capacity_ok = false;
      break;
    }

  rep.demand_ok = true;
  for (std::size_t j = 0; j < n; ++j) {
    double delivered = 0.0;
    for (std::size_t i = 0; i < m; ++i) delivered += x(i, j);
    const double b = instance.customers[j].demand;
    if (std::abs(delivered - b) > 1e-9 * std::max(1.0, b)) {
      rep.demand_ok = false;
      break;
    }
  }

  rep.emissions = ghg_emissions(instance, params, solution, mode);
  rep.ghg_ok = rep.emissions <= params.ghg_cap;
  rep.feasible = rep.nonneg_ok && rep.capacity_ok && rep.demand_ok && rep.ghg_ok;
  return rep;
}

}  // namespace fctp
