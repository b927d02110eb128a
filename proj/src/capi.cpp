#include "fctp.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "fctp/evaluator.hpp"
#include "fctp/exact.hpp"
#include "fctp/heuristics.hpp"
#include "fctp/instances.hpp"
#include "fctp/model.hpp"
#include "fctp/stats.hpp"

struct fctp_instance {
  fctp::Instance instance;
  fctp::EmissionParams params;
};

struct fctp_solution {
  fctp::Solution solution;
};

namespace {

thread_local std::string g_last_error = "no error";

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

fctp_status fail(fctp_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

// Runs fn, translating exceptions to status codes.
template <typename Fn>
fctp_status guarded(Fn&& fn) {
  try {
    fn();
    return FCTP_OK;
  } catch (const IoError& e) {
    return fail(FCTP_ERR_IO, e.what());
  } catch (const fctp::ParseError& e) {
    return fail(FCTP_ERR_PARSE, e.what());
  } catch (const fctp::BudgetExceeded& e) {
    return fail(FCTP_ERR_LIMIT, e.what());
  } catch (const fctp::NoFeasibleAssignment& e) {
    return fail(FCTP_ERR_INFEASIBLE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(FCTP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(FCTP_ERR_INTERNAL, e.what());
  }
}

char* copy_to_c(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + std::string(path) + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const char* path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + std::string(path) + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + std::string(path) + "' failed");
}

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

fctp::GhgMode parse_mode(const char* name) {
  if (name == nullptr || std::strcmp(name, "example") == 0) return fctp::GhgMode::example;
  if (std::strcmp(name, "eq9") == 0) return fctp::GhgMode::eq9_literal;
  throw std::invalid_argument("unknown ghg mode '" + std::string(name) +
                              "' (expected 'example' or 'eq9')");
}

std::vector<fctp::Variant> parse_variant_list(const char* csv) {
  if (csv == nullptr)
    return {std::begin(fctp::kAllVariants), std::end(fctp::kAllVariants)};
  std::vector<fctp::Variant> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) out.push_back(fctp::parse_variant(item));
  require(!out.empty(), "empty variant list");
  return out;
}

}  // namespace

extern "C" {

const char* fctp_last_error(void) { return g_last_error.c_str(); }

void fctp_string_free(char* text) { std::free(text); }

/* ------------------------------------------------------------------ */

fctp_status fctp_instance_read(const char* path, fctp_instance** out) {
  return guarded([&] {
    require(path && out, "path and out must not be NULL");
    const auto parsed = fctp::parse_instance(read_file(path));
    *out = new fctp_instance{parsed.instance, parsed.params};
  });
}

fctp_status fctp_instance_parse(const char* text, fctp_instance** out) {
  return guarded([&] {
    require(text && out, "text and out must not be NULL");
    const auto parsed = fctp::parse_instance(std::string(text));
    *out = new fctp_instance{parsed.instance, parsed.params};
  });
}

fctp_status fctp_instance_write(const fctp_instance* inst, const char* path) {
  return guarded([&] {
    require(inst && path, "inst and path must not be NULL");
    write_file(path, fctp::serialize_instance(inst->instance, inst->params));
  });
}

fctp_status fctp_instance_to_text(const fctp_instance* inst, char** out_text) {
  return guarded([&] {
    require(inst && out_text, "inst and out_text must not be NULL");
    *out_text = copy_to_c(fctp::serialize_instance(inst->instance, inst->params));
  });
}

fctp_status fctp_instance_generate(const char* preset, uint64_t seed, int index,
                                   fctp_instance** out) {
  return guarded([&] {
    require(preset && out, "preset and out must not be NULL");
    require(index >= 0 && index < 3, "index must be 0, 1 or 2");
    auto family = fctp::generate_preset(fctp::parse_preset(preset), seed);
    auto& gen = family[static_cast<std::size_t>(index)];
    *out = new fctp_instance{std::move(gen.instance), std::move(gen.params)};
  });
}

void fctp_instance_free(fctp_instance* inst) { delete inst; }

size_t fctp_instance_centers(const fctp_instance* inst) {
  return inst ? inst->instance.center_count() : 0;
}

size_t fctp_instance_customers(const fctp_instance* inst) {
  return inst ? inst->instance.customer_count() : 0;
}

fctp_status fctp_instance_validate(const fctp_instance* inst, int* ok, char** out_report) {
  return guarded([&] {
    require(inst && ok, "inst and ok must not be NULL");
    const auto report = fctp::validate_instance(inst->instance);
    *ok = report.ok ? 1 : 0;
    if (out_report) {
      std::string text;
      for (const auto& v : report.violations) text += v.message + "\n";
      *out_report = copy_to_c(text);
    }
  });
}

/* ------------------------------------------------------------------ */

fctp_status fctp_solve(const fctp_instance* inst, const char* variant, uint64_t seed,
                       const char* ghg_mode, fctp_solution** out) {
  return guarded([&] {
    require(inst && variant && out, "inst, variant and out must not be NULL");
    auto result = fctp::construct_solution(inst->instance, inst->params, parse_mode(ghg_mode),
                                           fctp::parse_variant(variant), seed);
    *out = new fctp_solution{std::move(result.solution)};
  });
}

fctp_status fctp_brute_force(const fctp_instance* inst, const char* ghg_mode,
                             fctp_solution** out) {
  return guarded([&] {
    require(inst && out, "inst and out must not be NULL");
    auto result = fctp::brute_force_optimum(inst->instance, inst->params, parse_mode(ghg_mode));
    *out = new fctp_solution{std::move(result.solution)};
  });
}

fctp_status fctp_evaluate(const fctp_instance* inst, const fctp_solution* sol,
                          const char* ghg_mode, fctp_cost* cost, fctp_feasibility* feas) {
  return guarded([&] {
    require(inst && sol, "inst and sol must not be NULL");
    const auto mode = parse_mode(ghg_mode);
    if (cost) {
      const auto cb = fctp::total_cost(inst->instance, sol->solution);
      *cost = {cb.transport, cb.fixed, cb.total};
    }
    if (feas) {
      const auto rep = fctp::check_feasibility(inst->instance, inst->params, sol->solution, mode);
      *feas = {rep.nonneg_ok ? 1 : 0, rep.capacity_ok ? 1 : 0, rep.demand_ok ? 1 : 0,
               rep.ghg_ok ? 1 : 0, rep.feasible ? 1 : 0, rep.emissions};
    }
  });
}

fctp_status fctp_solution_read(const char* path, fctp_solution** out) {
  return guarded([&] {
    require(path && out, "path and out must not be NULL");
    *out = new fctp_solution{fctp::parse_solution(read_file(path))};
  });
}

fctp_status fctp_solution_parse(const char* text, fctp_solution** out) {
  return guarded([&] {
    require(text && out, "text and out must not be NULL");
    *out = new fctp_solution{fctp::parse_solution(std::string(text))};
  });
}

fctp_status fctp_solution_write(const fctp_solution* sol, const char* path) {
  return guarded([&] {
    require(sol && path, "sol and path must not be NULL");
    write_file(path, fctp::serialize_solution(sol->solution));
  });
}

fctp_status fctp_solution_to_text(const fctp_solution* sol, char** out_text) {
  return guarded([&] {
    require(sol && out_text, "sol and out_text must not be NULL");
    *out_text = copy_to_c(fctp::serialize_solution(sol->solution));
  });
}

fctp_status fctp_solution_flow(const fctp_solution* sol, const double** data, size_t* rows,
                               size_t* cols) {
  return guarded([&] {
    require(sol && data && rows && cols, "all arguments must not be NULL");
    *data = sol->solution.flow.data().data();
    *rows = sol->solution.flow.rows();
    *cols = sol->solution.flow.cols();
  });
}

void fctp_solution_free(fctp_solution* sol) { delete sol; }

/* ------------------------------------------------------------------ */

fctp_status fctp_t_test(const double* a, size_t n_a, const double* b, size_t n_b,
                        fctp_ttest* out) {
  return guarded([&] {
    require(a && b && out, "a, b and out must not be NULL");
    const auto r = fctp::unpaired_t_test(std::span<const double>(a, n_a),
                                         std::span<const double>(b, n_b));
    *out = {r.t, r.p, r.df, r.n_a, r.n_b};
  });
}

fctp_status fctp_compare_run(const fctp_instance* const* instances, const char* const* ids,
                             size_t count, const fctp_compare_params* params, char** out_tsv) {
  return guarded([&] {
    require(instances && ids && params && out_tsv,
            "instances, ids, params and out_tsv must not be NULL");
    require(count > 0, "at least one instance is required");
    require(params->trials >= 2, "trials must be >= 2");

    const auto mode = parse_mode(params->ghg_mode);
    const auto baseline = fctp::parse_variant(params->baseline ? params->baseline : "dy10");
    const auto variants = parse_variant_list(params->variants_csv);

    const std::string metric = params->metric ? params->metric : "both";
    require(metric == "emissions" || metric == "cost" || metric == "both",
            "metric must be 'emissions', 'cost' or 'both'");

    std::vector<fctp::GeneratedInstance> gen(count);
    for (size_t k = 0; k < count; ++k) {
      require(instances[k] && ids[k], "instances[] and ids[] entries must not be NULL");
      gen[k].id = ids[k];
      gen[k].instance = instances[k]->instance;
      gen[k].params = instances[k]->params;
    }

    const auto table =
        fctp::run_experiment(gen, mode, variants, params->trials, params->seed);

    std::string out;
    out += "# compare baseline=" + std::string(fctp::variant_name(baseline)) +
           " trials=" + std::to_string(params->trials) + " seed=" +
           std::to_string(params->seed) +
           " ghg-mode=" + (mode == fctp::GhgMode::example ? "example" : "eq9") + "\n";
    if (metric == "emissions" || metric == "both") {
      out += "# metric: emissions\n";
      out += fctp::comparison_tsv(
          fctp::compare_vs_baseline(table, baseline, fctp::Metric::emissions));
    }
    if (metric == "cost" || metric == "both") {
      out += "# metric: cost\n";
      out += fctp::comparison_tsv(fctp::compare_vs_baseline(table, baseline, fctp::Metric::cost));
    }
    if (params->include_raw) {
      out += "# trials\n";
      out += fctp::trials_tsv(table);
    }
    *out_tsv = copy_to_c(out);
  });
}

}  // extern "C"
