#ifndef FCTP_MODEL_HPP
#define FCTP_MODEL_HPP

// Problem data for the two-stage fixed-charge transportation problem:
// distribution centers fed by a single manufacturer, customers with fixed
// demands, per-unit and fixed costs on every center and center->customer
// edge, and the emission factors entering the GHG cap.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fctp {

// Dense row-major matrix of doubles. Value type, equality is element-wise.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(data_.data() + r * cols_, cols_);
  }
  std::span<const double> data() const { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct DistributionCenter {
  double capacity = 0.0;             // a_i, units the center can handle
  double opening_cost = 0.0;         // f_i, charged once if the center ships anything
  double unit_transport_cost = 0.0;  // c_i, manufacturer -> center, per unit
};

struct Customer {
  double demand = 0.0;  // b_j
};

struct Instance {
  std::vector<DistributionCenter> centers;
  std::vector<Customer> customers;
  Matrix edge_fixed_cost;  // f_ij, m x n
  Matrix edge_unit_cost;   // c_ij, m x n

  std::size_t center_count() const { return centers.size(); }
  std::size_t customer_count() const { return customers.size(); }

  double total_capacity() const;
  double total_demand() const;
};

// Emission factors and the cap. Stage-1 factors are per center, stage-2
// factors per edge; files only carry the uniform scalar shorthand, so
// `uniform` is the usual way to build one.
struct EmissionParams {
  double alpha_manufacturer = 0.0;         // alpha', per unit leaving the manufacturer
  std::vector<double> alpha_center;        // alpha_i, per unit handled at center i
  std::vector<double> beta_manufacturer;   // beta'_i, per unit-cost-distance, stage 1
  Matrix beta_edge;                        // beta_ij, per unit-cost-distance, stage 2
  double ghg_cap = 0.0;

  static EmissionParams uniform(double alpha_man, double alpha, double beta_man,
                                double beta, double cap, std::size_t m, std::size_t n);

  // True when every per-center / per-edge factor carries a single value,
  // i.e. the params are expressible in the file format.
  bool is_uniform() const;
};

// Shipment plan: flow(i, j) is the quantity sent from center i to customer j.
// Stage-1 flows and open/used indicators are derived, not stored.
struct Solution {
  Matrix flow;
};

enum class ViolationKind { negative_value, capacity_shortfall, shape_mismatch };

struct Violation {
  ViolationKind kind;
  std::string location;  // e.g. "cost(2,3)", "capacity(1)" -- 1-based like the math
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

// Reports every broken invariant: negative entries, matrix shapes not m x n,
// total capacity short of total demand. Violations are data, not errors.
ValidationReport validate_instance(const Instance& instance);

// Thrown by the text-format readers; line is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ParsedInstance {
  Instance instance;
  EmissionParams params;
};

// Reads the line-oriented instance format ('#' comments, blank lines
// ignored). Malformed input raises ParseError with the offending line.
ParsedInstance parse_instance(std::istream& in);
ParsedInstance parse_instance(const std::string& text);

// Canonical text form; parse(serialize(x)) == x field for field. Requires
// uniform emission params (the on-disk shorthand), else invalid_argument.
std::string serialize_instance(const Instance& instance, const EmissionParams& params);

// Solution text form: "m n" header then m rows of n flow values.
std::string serialize_solution(const Solution& solution);
Solution parse_solution(std::istream& in);
Solution parse_solution(const std::string& text);

// Shortest decimal form that parses back to the same double ("10", "0.02").
std::string format_value(double v);

}  // namespace fctp

#endif  // FCTP_MODEL_HPP
