#ifndef FCTP_H
#define FCTP_H

/*
 * C interface to the fctp solver library.
 *
 * Handles are opaque; every function that can fail returns an fctp_status
 * and leaves a human-readable message in fctp_last_error() (thread-local).
 * Strings returned through char** are owned by the caller and released
 * with fctp_string_free().
 *
 * All stochastic entry points take an explicit 64-bit seed and are
 * bit-reproducible: the same inputs always produce the same outputs.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  FCTP_OK = 0,
  FCTP_ERR_IO = 1,               /* file missing or unreadable/unwritable */
  FCTP_ERR_PARSE = 2,            /* malformed instance/solution text */
  FCTP_ERR_INVALID_ARGUMENT = 3, /* bad name, shape mismatch, invalid data */
  FCTP_ERR_INFEASIBLE = 4,       /* no feasible assignment exists */
  FCTP_ERR_LIMIT = 5,            /* enumeration budget exceeded */
  FCTP_ERR_INTERNAL = 6
} fctp_status;

/* Problem data plus emission parameters, as stored in a .fctp file. */
typedef struct fctp_instance fctp_instance;
/* A shipment plan (m x n flow matrix). */
typedef struct fctp_solution fctp_solution;

/* Message for the most recent failure on this thread; never NULL. */
const char* fctp_last_error(void);

void fctp_string_free(char* text);

/* ------------------------------------------------------------------ */
/* Instances                                                          */
/* ------------------------------------------------------------------ */

fctp_status fctp_instance_read(const char* path, fctp_instance** out);
fctp_status fctp_instance_parse(const char* text, fctp_instance** out);
fctp_status fctp_instance_write(const fctp_instance* inst, const char* path);
fctp_status fctp_instance_to_text(const fctp_instance* inst, char** out_text);

/* Seeded benchmark instance from a preset family ("small" 10x10,
 * "medium" 10x30, "large" 30x100); index selects one of the three
 * instances of the family (0..2). */
fctp_status fctp_instance_generate(const char* preset, uint64_t seed, int index,
                                   fctp_instance** out);

void fctp_instance_free(fctp_instance* inst);

size_t fctp_instance_centers(const fctp_instance* inst);
size_t fctp_instance_customers(const fctp_instance* inst);

/* ok becomes 1 for a well-formed instance; out_report (optional, may be
 * NULL) receives one violation per line. */
fctp_status fctp_instance_validate(const fctp_instance* inst, int* ok, char** out_report);

/* ------------------------------------------------------------------ */
/* Solving and evaluation                                             */
/* ------------------------------------------------------------------ */

typedef struct {
  double transport; /* stage-1 plus stage-2 per-unit costs */
  double fixed;     /* opening costs plus per-edge fixed charges */
  double total;     /* transport + fixed */
} fctp_cost;

typedef struct {
  int nonneg_ok;
  int capacity_ok;
  int demand_ok;
  int ghg_ok;
  int feasible; /* conjunction of the four flags */
  double emissions;
} fctp_feasibility;

/* variant: "nn", "dx", "dy10", "dy11" or "dy12".
 * ghg_mode: "example" (worked-example formula, the default when NULL)
 * or "eq9" (literal capacity/demand-weighted form). */
fctp_status fctp_solve(const fctp_instance* inst, const char* variant, uint64_t seed,
                       const char* ghg_mode, fctp_solution** out);

/* Exhaustive unsplit-assignment optimum for small instances. */
fctp_status fctp_brute_force(const fctp_instance* inst, const char* ghg_mode,
                             fctp_solution** out);

fctp_status fctp_evaluate(const fctp_instance* inst, const fctp_solution* sol,
                          const char* ghg_mode, fctp_cost* cost, fctp_feasibility* feas);

fctp_status fctp_solution_read(const char* path, fctp_solution** out);
fctp_status fctp_solution_parse(const char* text, fctp_solution** out);
fctp_status fctp_solution_write(const fctp_solution* sol, const char* path);
fctp_status fctp_solution_to_text(const fctp_solution* sol, char** out_text);

/* Row-major view into the flow matrix; valid while sol is alive. */
fctp_status fctp_solution_flow(const fctp_solution* sol, const double** data, size_t* rows,
                               size_t* cols);

void fctp_solution_free(fctp_solution* sol);

/* ------------------------------------------------------------------ */
/* Statistics                                                         */
/* ------------------------------------------------------------------ */

typedef struct {
  double t;
  double p; /* two-tailed, in (0, 1] */
  double df;
  size_t n_a;
  size_t n_b;
} fctp_ttest;

/* Unpaired pooled-variance Student's t-test; each sample needs >= 2
 * values. */
fctp_status fctp_t_test(const double* a, size_t n_a, const double* b, size_t n_b,
                        fctp_ttest* out);

typedef struct {
  const char* ghg_mode;     /* NULL -> "example" */
  const char* baseline;     /* NULL -> "dy10" */
  const char* metric;       /* "emissions", "cost" or NULL -> "both" */
  const char* variants_csv; /* NULL -> "nn,dx,dy10,dy11,dy12" */
  int trials;               /* per stochastic variant; nn runs once */
  uint64_t seed;
  int include_raw; /* append the per-trial table */
} fctp_compare_params;

/* Runs every variant on every instance and renders tab-separated
 * comparison tables against the baseline. ids[] labels the instances in
 * the output and enters the per-trial seed derivation, so the same
 * (instances, ids, params) always yields byte-identical text. */
fctp_status fctp_compare_run(const fctp_instance* const* instances, const char* const* ids,
                             size_t count, const fctp_compare_params* params, char** out_tsv);

#ifdef __cplusplus
}
#endif

#endif /* FCTP_H */
