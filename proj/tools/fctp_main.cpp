// Command-line front end for the fctp shared library. Talks to the solver
// exclusively through the C API in fctp.h.
//
//   fctp gen --preset small --seed 1 --out DIR
//   fctp solve --in FILE --variant nn --seed 7 [--ghg-mode example] [--flow] [--out FILE]
//   fctp eval --in FILE --solution FILE [--ghg-mode example]
//   fctp compare --in DIR --trials 30 --seed 1 [--baseline dy10] [--metric both] [--raw]
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fctp.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

// Shortest decimal form that round-trips, matching the library's own output.
std::string num(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// Flag validity is CLI11's job; anything the library rejects after that is
// bad data (missing file, malformed text, shape mismatch, infeasibility).
[[noreturn]] void die() {
  std::fprintf(stderr, "error: %s\n", fctp_last_error());
  std::exit(kExitData);
}

void check(fctp_status status) {
  if (status != FCTP_OK) die();
}

using InstancePtr = std::unique_ptr<fctp_instance, decltype(&fctp_instance_free)>;
using SolutionPtr = std::unique_ptr<fctp_solution, decltype(&fctp_solution_free)>;

InstancePtr read_instance(const std::string& path) {
  fctp_instance* inst = nullptr;
  check(fctp_instance_read(path.c_str(), &inst));
  return InstancePtr(inst, &fctp_instance_free);
}

void print_flow(const fctp_solution* sol) {
  const double* data = nullptr;
  size_t rows = 0;
  size_t cols = 0;
  check(fctp_solution_flow(sol, &data, &rows, &cols));
  std::string out = std::to_string(rows) + " " + std::to_string(cols) + "\n";
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) {
      if (j > 0) out += " ";
      out += num(data[i * cols + j]);
    }
    out += "\n";
  }
  std::fputs(out.c_str(), stdout);
}

std::string feasibility_line(const fctp_feasibility& f) {
  return "nonneg_ok=" + std::to_string(f.nonneg_ok) +
         " capacity_ok=" + std::to_string(f.capacity_ok) +
         " demand_ok=" + std::to_string(f.demand_ok) + " ghg_ok=" + std::to_string(f.ghg_ok) +
         " feasible=" + std::to_string(f.feasible);
}

int run_gen(const std::string& preset, std::uint64_t seed, const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::fprintf(stderr, "error: cannot create '%s': %s\n", out_dir.c_str(),
                 ec.message().c_str());
    return kExitData;
  }
  for (int k = 0; k < 3; ++k) {
    fctp_instance* inst = nullptr;
    check(fctp_instance_generate(preset.c_str(), seed, k, &inst));
    InstancePtr guard(inst, &fctp_instance_free);
    const auto path =
        std::filesystem::path(out_dir) / (preset + "_" + std::to_string(k) + ".fctp");
    check(fctp_instance_write(inst, path.string().c_str()));
    std::printf("%s\n", path.string().c_str());
  }
  return 0;
}

int run_solve(const std::string& in, const std::string& variant, std::uint64_t seed,
              const std::string& mode, bool flow, const std::string& out_path) {
  auto inst = read_instance(in);
  fctp_solution* sol = nullptr;
  check(fctp_solve(inst.get(), variant.c_str(), seed, mode.c_str(), &sol));
  SolutionPtr guard(sol, &fctp_solution_free);

  fctp_cost cost{};
  fctp_feasibility feas{};
  check(fctp_evaluate(inst.get(), sol, mode.c_str(), &cost, &feas));

  std::printf("variant=%s seed=%llu Z=%s transport=%s fixed=%s emissions=%s %s\n",
              variant.c_str(), static_cast<unsigned long long>(seed), num(cost.total).c_str(),
              num(cost.transport).c_str(), num(cost.fixed).c_str(), num(feas.emissions).c_str(),
              feasibility_line(feas).c_str());
  if (flow) print_flow(sol);
  if (!out_path.empty()) check(fctp_solution_write(sol, out_path.c_str()));
  return 0;
}

int run_eval(const std::string& in, const std::string& solution_path, const std::string& mode) {
  auto inst = read_instance(in);
  fctp_solution* sol = nullptr;
  check(fctp_solution_read(solution_path.c_str(), &sol));
  SolutionPtr guard(sol, &fctp_solution_free);

  fctp_cost cost{};
  fctp_feasibility feas{};
  check(fctp_evaluate(inst.get(), sol, mode.c_str(), &cost, &feas));

  std::printf("Z=%s transport=%s fixed=%s\n", num(cost.total).c_str(),
              num(cost.transport).c_str(), num(cost.fixed).c_str());
  std::printf("emissions=%s\n", num(feas.emissions).c_str());
  std::printf("%s\n", feasibility_line(feas).c_str());
  return 0;
}

int run_compare(const std::string& in_dir, int trials, std::uint64_t seed,
                const std::string& baseline, const std::string& mode, const std::string& metric,
                bool raw, const std::string& out_path) {
  std::vector<std::filesystem::path> paths;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(in_dir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".fctp")
      paths.push_back(entry.path());
  if (ec) {
    std::fprintf(stderr, "error: cannot read '%s': %s\n", in_dir.c_str(), ec.message().c_str());
    return kExitData;
  }
  if (paths.empty()) {
    std::fprintf(stderr, "error: no .fctp files in '%s'\n", in_dir.c_str());
    return kExitData;
  }
  std::sort(paths.begin(), paths.end());

  std::vector<InstancePtr> owners;
  std::vector<const fctp_instance*> instances;
  std::vector<std::string> id_storage;
  for (const auto& p : paths) {
    owners.push_back(read_instance(p.string()));
    instances.push_back(owners.back().get());
    id_storage.push_back(p.stem().string());
  }
  std::vector<const char*> ids;
  for (const auto& id : id_storage) ids.push_back(id.c_str());

  fctp_compare_params params{};
  params.ghg_mode = mode.c_str();
  params.baseline = baseline.c_str();
  params.metric = metric.c_str();
  params.variants_csv = nullptr;
  params.trials = trials;
  params.seed = seed;
  params.include_raw = raw ? 1 : 0;

  char* tsv = nullptr;
  check(fctp_compare_run(instances.data(), ids.data(), instances.size(), &params, &tsv));
  if (out_path.empty()) {
    std::fputs(tsv, stdout);
  } else {
    std::FILE* f = std::fopen(out_path.c_str(), "wb");
    if (!f) {
      std::fprintf(stderr, "error: cannot open '%s' for writing\n", out_path.c_str());
      fctp_string_free(tsv);
      return kExitData;
    }
    std::fputs(tsv, f);
    std::fclose(f);
  }
  fctp_string_free(tsv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-stage fixed-charge transportation solver with a GHG emission cap"};
  app.require_subcommand(1);

  const std::vector<std::string> variant_names = {"nn", "dx", "dy10", "dy11", "dy12"};
  const std::vector<std::string> mode_names = {"example", "eq9"};

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a benchmark instance family");
  std::string gen_preset;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("--preset", gen_preset, "Family: small (10x10), medium (10x30), large (30x100)")
      ->required()
      ->check(CLI::IsMember({"small", "medium", "large"}));
  gen->add_option("--seed", gen_seed, "Base seed; instances use seed, seed+1, seed+2");
  gen->add_option("--out", gen_out, "Output directory")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "Construct a solution with one heuristic");
  std::string solve_in, solve_variant, solve_mode = "example", solve_out;
  std::uint64_t solve_seed = 1;
  bool solve_flow = false;
  solve->add_option("--in", solve_in, "Instance file")->required();
  solve->add_option("--variant", solve_variant, "Heuristic variant")
      ->required()
      ->check(CLI::IsMember(variant_names));
  solve->add_option("--seed", solve_seed, "Seed for the stochastic variants");
  solve->add_option("--ghg-mode", solve_mode, "Emission formula")
      ->check(CLI::IsMember(mode_names));
  solve->add_flag("--flow", solve_flow, "Print the flow matrix after the summary");
  solve->add_option("--out", solve_out, "Write the solution to this file");

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a stored solution against an instance");
  std::string eval_in, eval_solution, eval_mode = "example";
  eval->add_option("--in", eval_in, "Instance file")->required();
  eval->add_option("--solution", eval_solution, "Solution file")->required();
  eval->add_option("--ghg-mode", eval_mode, "Emission formula")->check(CLI::IsMember(mode_names));

  // compare
  auto* compare = app.add_subcommand("compare", "Run all variants and t-test them vs a baseline");
  std::string cmp_in, cmp_baseline = "dy10", cmp_mode = "example", cmp_metric = "both", cmp_out;
  int cmp_trials = 30;
  std::uint64_t cmp_seed = 1;
  bool cmp_raw = false;
  compare->add_option("--in", cmp_in, "Directory of .fctp instances")->required();
  compare->add_option("--trials", cmp_trials, "Trials per stochastic variant")
      ->check(CLI::Range(2, 1000000));
  compare->add_option("--seed", cmp_seed, "Base seed for the whole experiment");
  compare->add_option("--baseline", cmp_baseline, "Baseline variant")
      ->check(CLI::IsMember(variant_names));
  compare->add_option("--ghg-mode", cmp_mode, "Emission formula")
      ->check(CLI::IsMember(mode_names));
  compare->add_option("--metric", cmp_metric, "Comparison metric")
      ->check(CLI::IsMember({"emissions", "cost", "both"}));
  compare->add_flag("--raw", cmp_raw, "Append the raw per-trial table");
  compare->add_option("--out", cmp_out, "Write the tables to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  if (gen->parsed()) return run_gen(gen_preset, gen_seed, gen_out);
  if (solve->parsed())
    return run_solve(solve_in, solve_variant, solve_seed, solve_mode, solve_flow, solve_out);
  if (eval->parsed()) return run_eval(eval_in, eval_solution, eval_mode);
  if (compare->parsed())
    return run_compare(cmp_in, cmp_trials, cmp_seed, cmp_baseline, cmp_mode, cmp_metric, cmp_raw,
                       cmp_out);
  return kExitUsage;
}
