#include "fctp/model.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>
#include <system_error>

namespace fctp {

double Instance::total_capacity() const {
  double s = 0.0;
  for (const auto& c : centers) s += c.capacity;
  return s;
}

double Instance::total_demand() const {
  double s = 0.0;
  for (const auto& c : customers) s += c.demand;
  return s;
}

EmissionParams EmissionParams::uniform(double alpha_man, double alpha, double beta_man,
                                       double beta, double cap, std::size_t m,
                                       std::size_t n) {
  EmissionParams p;
  p.alpha_manufacturer = alpha_man;
  p.alpha_center.assign(m, alpha);
  p.beta_manufacturer.assign(m, beta_man);
  p.beta_edge = Matrix(m, n, beta);
  p.ghg_cap = cap;
  return p;
}

namespace {

bool all_equal(std::span<const double> v) {
  for (double x : v)
    if (x != v.front()) return false;
  return true;
}

}  // namespace

bool EmissionParams::is_uniform() const {
  if (!alpha_center.empty() && !all_equal(alpha_center)) return false;
  if (!beta_manufacturer.empty() && !all_equal(beta_manufacturer)) return false;
  if (beta_edge.rows() > 0 && beta_edge.cols() > 0 && !all_equal(beta_edge.data()))
    return false;
  return true;
}

std::string format_value(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

namespace {

std::string loc1(const char* field, std::size_t i) {
  return std::string(field) + "(" + std::to_string(i + 1) + ")";
}

std::string loc2(const char* field, std::size_t i, std::size_t j) {
  return std::string(field) + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

void check_nonneg(std::vector<Violation>& out, double v, std::string loc) {
  if (v < 0.0 || std::isnan(v))
    out.push_back({ViolationKind::negative_value, loc, loc + " = " + format_value(v)});
}

void check_matrix(std::vector<Violation>& out, const Matrix& mat, const char* field,
                  std::size_t m, std::size_t n) {
  if (mat.rows() != m || mat.cols() != n) {
    out.push_back({ViolationKind::shape_mismatch, field,
                   std::string(field) + " is " + std::to_string(mat.rows()) + "x" +
                       std::to_string(mat.cols()) + ", expected " + std::to_string(m) +
                       "x" + std::to_string(n)});
    return;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) check_nonneg(out, mat(i, j), loc2(field, i, j));
}

}  // namespace

ValidationReport validate_instance(const Instance& instance) {
  ValidationReport report;
  auto& v = report.violations;
  const std::size_t m = instance.center_count();
  const std::size_t n = instance.customer_count();

  for (std::size_t i = 0; i < m; ++i) {
    check_nonneg(v, instance.centers[i].capacity, loc1("capacity", i));
    check_nonneg(v, instance.centers[i].opening_cost, loc1("opening", i));
    check_nonneg(v, instance.centers[i].unit_transport_cost, loc1("unitcost", i));
  }
  for (std::size_t j = 0; j < n; ++j)
    check_nonneg(v, instance.customers[j].demand, loc1("demand", j));

  check_matrix(v, instance.edge_fixed_cost, "fixed", m, n);
  check_matrix(v, instance.edge_unit_cost, "cost", m, n);

  if (instance.total_capacity() < instance.total_demand())
    v.push_back({ViolationKind::capacity_shortfall, "capacity",
                 "total capacity " + format_value(instance.total_capacity()) +
                     " < total demand " + format_value(instance.total_demand())});

  report.ok = v.empty();
  return report;
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

namespace {

// Line-by-line tokenizer; strips '#' comments, skips blanks, counts lines.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-empty line split into tokens, or false at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
      tokens.clear();
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  int line_no() const { return line_no_; }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

double parse_number(const std::string& tok, int line) {
  double v = 0.0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() || !std::isfinite(v))
    throw ParseError(line, "expected a number, got '" + tok + "'");
  return v;
}

std::size_t parse_count(const std::string& tok, int line) {
  std::size_t v = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() || v == 0)
    throw ParseError(line, "expected a positive integer, got '" + tok + "'");
  return v;
}

std::vector<double> labeled_values(LineReader& reader, const std::string& label,
                                   std::size_t count) {
  std::vector<std::string> tokens;
  if (!reader.next(tokens))
    throw ParseError(reader.line_no() + 1, "unexpected end of input, expected '" + label + "'");
  if (tokens.front() != label)
    throw ParseError(reader.line_no(), "expected '" + label + "', got '" + tokens.front() + "'");
  if (tokens.size() - 1 != count)
    throw ParseError(reader.line_no(), label + " expects " + std::to_string(count) +
                                           " values, got " + std::to_string(tokens.size() - 1));
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t k = 1; k < tokens.size(); ++k)
    out.push_back(parse_number(tokens[k], reader.line_no()));
  return out;
}

Matrix labeled_matrix(LineReader& reader, const std::string& label, std::size_t m,
                      std::size_t n) {
  std::vector<std::string> tokens;
  if (!reader.next(tokens))
    throw ParseError(reader.line_no() + 1, "unexpected end of input, expected '" + label + "'");
  if (tokens.size() != 1 || tokens.front() != label)
    throw ParseError(reader.line_no(), "expected '" + label + "' on its own line");
  Matrix mat(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    if (!reader.next(tokens))
      throw ParseError(reader.line_no() + 1,
                       "unexpected end of input in " + label + " row " + std::to_string(i + 1));
    if (tokens.size() != n)
      throw ParseError(reader.line_no(), label + " row " + std::to_string(i + 1) + " has " +
                                             std::to_string(tokens.size()) + " values, expected " +
                                             std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) mat(i, j) = parse_number(tokens[j], reader.line_no());
  }
  return mat;
}

}  // namespace

ParsedInstance parse_instance(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> tokens;

  if (!reader.next(tokens)) throw ParseError(1, "empty input");
  if (tokens.size() != 2 || tokens[0] != "fctp")
    throw ParseError(reader.line_no(), "expected header 'fctp <version>'");
  if (tokens[1] != "1")
    throw ParseError(reader.line_no(), "unsupported format version '" + tokens[1] + "'");

  if (!reader.next(tokens))
    throw ParseError(reader.line_no() + 1, "unexpected end of input, expected 'm n'");
  if (tokens.size() != 2)
    throw ParseError(reader.line_no(), "expected 'm n' (two positive integers)");
  const std::size_t m = parse_count(tokens[0], reader.line_no());
  const std::size_t n = parse_count(tokens[1], reader.line_no());

  const auto capacity = labeled_values(reader, "capacity:", m);
  const auto opening = labeled_values(reader, "opening:", m);
  const auto unitcost = labeled_values(reader, "unitcost:", m);
  const auto demand = labeled_values(reader, "demand:", n);

  ParsedInstance out;
  out.instance.centers.resize(m);
  for (std::size_t i = 0; i < m; ++i)
    out.instance.centers[i] = {capacity[i], opening[i], unitcost[i]};
  out.instance.customers.resize(n);
  for (std::size_t j = 0; j < n; ++j) out.instance.customers[j] = {demand[j]};

  out.instance.edge_fixed_cost = labeled_matrix(reader, "fixed:", m, n);
  out.instance.edge_unit_cost = labeled_matrix(reader, "cost:", m, n);

  const auto em = labeled_values(reader, "emissions:", 5);
  for (int k = 0; k < 4; ++k)
    if (em[static_cast<std::size_t>(k)] < 0.0)
      throw ParseError(reader.line_no(), "emission factors must be nonnegative");
  if (em[4] <= 0.0) throw ParseError(reader.line_no(), "ghg cap must be positive");
  out.params = EmissionParams::uniform(em[0], em[1], em[2], em[3], em[4], m, n);

  if (reader.next(tokens))
    throw ParseError(reader.line_no(), "unexpected trailing content '" + tokens.front() + "'");
  return out;
}

ParsedInstance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

std::string serialize_instance(const Instance& instance, const EmissionParams& params) {
  if (!params.is_uniform())
    throw std::invalid_argument("emission params are not uniform; file format stores scalars");
  const std::size_t m = instance.center_count();
  const std::size_t n = instance.customer_count();

  std::string out;
  out += "fctp 1\n";
  out += std::to_string(m) + " " + std::to_string(n) + "\n";

  auto emit_row = [&out](const char* label, auto&& value_at, std::size_t count) {
    out += label;
    for (std::size_t k = 0; k < count; ++k) out += " " + format_value(value_at(k));
    out += "\n";
  };
  emit_row("capacity:", [&](std::size_t i) { return instance.centers[i].capacity; }, m);
  emit_row("opening:", [&](std::size_t i) { return instance.centers[i].opening_cost; }, m);
  emit_row("unitcost:", [&](std::size_t i) { return instance.centers[i].unit_transport_cost; }, m);
  emit_row("demand:", [&](std::size_t j) { return instance.customers[j].demand; }, n);

  auto emit_matrix = [&](const char* label, const Matrix& mat) {
    out += label;
    out += "\n";
    for (std::size_t i = 0; i < mat.rows(); ++i) {
      for (std::size_t j = 0; j < mat.cols(); ++j) {
        if (j > 0) out += " ";
        out += format_value(mat(i, j));
      }
      out += "\n";
    }
  };
  emit_matrix("fixed:", instance.edge_fixed_cost);
  emit_matrix("cost:", instance.edge_unit_cost);

  const double alpha = params.alpha_center.empty() ? 0.0 : params.alpha_center.front();
  const double beta_man =
      params.beta_manufacturer.empty() ? 0.0 : params.beta_manufacturer.front();
  const double beta =
      params.beta_edge.rows() * params.beta_edge.cols() == 0 ? 0.0 : params.beta_edge(0, 0);
  out += "emissions: " + format_value(params.alpha_manufacturer) + " " + format_value(alpha) +
         " " + format_value(beta_man) + " " + format_value(beta) + " " +
         format_value(params.ghg_cap) + "\n";
  return out;
}

std::string serialize_solution(const Solution& solution) {
  const Matrix& f = solution.flow;
  std::string out = std::to_string(f.rows()) + " " + std::to_string(f.cols()) + "\n";
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      if (j > 0) out += " ";
      out += format_value(f(i, j));
    }
    out += "\n";
  }
  return out;
}

Solution parse_solution(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> tokens;
  if (!reader.next(tokens)) throw ParseError(1, "empty input");
  if (tokens.size() != 2) throw ParseError(reader.line_no(), "expected 'm n' header");
  const std::size_t m = parse_count(tokens[0], reader.line_no());
  const std::size_t n = parse_count(tokens[1], reader.line_no());

  Solution sol{Matrix(m, n)};
  for (std::size_t i = 0; i < m; ++i) {
    if (!reader.next(tokens))
      throw ParseError(reader.line_no() + 1,
                       "unexpected end of input in flow row " + std::to_string(i + 1));
    if (tokens.size() != n)
      throw ParseError(reader.line_no(), "flow row " + std::to_string(i + 1) + " has " +
                                             std::to_string(tokens.size()) +
                                             " values, expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) sol.flow(i, j) = parse_number(tokens[j], reader.line_no());
  }
  if (reader.next(tokens))
    throw ParseError(reader.line_no(), "unexpected trailing content '" + tokens.front() + "'");
  return sol;
}

Solution parse_solution(const std::string& text) {
  std::istringstream in(text);
  return parse_solution(in);
}

}  // namespace fctp
