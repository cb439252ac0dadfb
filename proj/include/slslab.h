/*
 * slslab - stochastic local search laboratory for random K-SAT.
 *
 * C interface to the solver core: opaque handles, integer status codes,
 * caller-owned output buffers. Every function returns SLS_OK on success;
 * on failure sls_error_message() describes the most recent error of the
 * calling thread.
 *
 * Reproducibility contract: every run is a pure function of (instance,
 * parameters, seed). Harness functions derive per-trial seeds from the
 * master seed with sls_derive_seed, so output files are byte-identical
 * across repetitions, platforms and thread counts.
 */

#ifndef SLSLAB_H
#define SLSLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sls_status {
  SLS_OK = 0,
  SLS_ERR_ARGUMENT = 1, /* invalid parameter or precondition violated */
  SLS_ERR_PARSE = 2,    /* malformed DIMACS or assignment text */
  SLS_ERR_IO = 3,       /* file could not be read or written */
  SLS_ERR_SEARCH = 4,   /* a required search ended at its cutoff */
  SLS_ERR_INTERNAL = 5
} sls_status;

/* Detail for the calling thread's most recent failure; empty string after
 * a success. The pointer stays valid until the next call on this thread. */
const char *sls_error_message(void);

/* Child seed for trial `index` under a master seed. */
uint64_t sls_derive_seed(uint64_t master_seed, uint64_t index);

/* Frees any buffer returned through a char** out parameter. */
void sls_string_free(char *text);

/* ------------------------------------------------------------------ */
/* Instances                                                          */

typedef struct sls_instance sls_instance;

/* Random K-SAT: round(alpha*n) clauses, each K distinct variables drawn
 * uniformly with fair-coin polarities. Deterministic in the seed. */
sls_status sls_instance_generate(int32_t k, int32_t n, double alpha, uint64_t seed,
                                 sls_instance **out);

/* DIMACS CNF text; length 0 means NUL-terminated. Clause widths must all
 * be equal (this laboratory is K-uniform). */
sls_status sls_instance_parse(const char *text, size_t length, sls_instance **out);
sls_status sls_instance_load(const char *path, sls_instance **out);

/* Canonical DIMACS form; byte-exact reproducible. */
sls_status sls_instance_format(const sls_instance *inst, char **text, size_t *length);
sls_status sls_instance_save(const sls_instance *inst, const char *path);

void sls_instance_free(sls_instance *inst);

int32_t sls_instance_width(const sls_instance *inst);     /* K */
int32_t sls_instance_variables(const sls_instance *inst); /* N */
int32_t sls_instance_clauses(const sls_instance *inst);   /* M */

/* ------------------------------------------------------------------ */
/* Assignments (arrays of n bytes, 0/1, variable v at index v-1)      */

/* Value-line files: `v <signed literal> ... 0`, positive = true. */
sls_status sls_assignment_load(const char *path, int32_t n, uint8_t *values);
sls_status sls_assignment_save(const char *path, const uint8_t *values, int32_t n);

/* 1 if the assignment satisfies every clause, else 0. */
sls_status sls_assignment_check(const sls_instance *inst, const uint8_t *values,
                                int32_t *satisfied);

/* ------------------------------------------------------------------ */
/* Solver runs                                                        */

typedef enum sls_algorithm {
  SLS_ALGO_RWSAT = 0,    /* focused random walk */
  SLS_ALGO_WALKSAT = 1,  /* WalkSAT/SKC baseline */
  SLS_ALGO_FMS = 2,      /* Focused Metropolis Search */
  SLS_ALGO_CHAINSAT = 3  /* never moves up in energy */
} sls_algorithm;

typedef struct sls_params {
  sls_algorithm algorithm;
  double eta;    /* FMS temperature, in [0,1] */
  double noise;  /* WalkSAT noise, in [0,1] */
  double p1;     /* ChainSAT descent probability, in (0,1] */
  double p2;     /* ChainSAT chain-termination probability, in (0,1] */
  double cutoff; /* max flips per variable (iterations for ChainSAT) */
} sls_params;

typedef struct sls_run_record {
  int32_t solved;
  uint64_t flips;            /* accepted flips */
  uint64_t iterations;       /* main-loop passes */
  uint64_t chain_starts;     /* ChainSAT non-chaining branch executions */
  double avg_chain_length;   /* iterations/chain_starts - 1 */
  int64_t final_energy;
  uint64_t seed;
  double elapsed_s;
} sls_run_record;

/* One trajectory. `initial` may be NULL for a uniform random start;
 * `solution` may be NULL or point at n bytes, filled only when solved.
 * Solved records are re-verified against the full clause list. */
sls_status sls_solve(const sls_instance *inst, const sls_params *params, uint64_t seed,
                     const uint8_t *initial, sls_run_record *record, uint8_t *solution);

/* The record as one JSON object (stable field names, includes elapsed_s). */
sls_status sls_run_record_json(const sls_run_record *record, char **text, size_t *length);

/* ------------------------------------------------------------------ */
/* Whitening                                                          */

typedef enum sls_whiteness {
  SLS_COMPLETELY_WHITE = 0,
  SLS_CORE = 1
} sls_whiteness;

/* Whiteness depths of a configuration. `depths` may be NULL or point at n
 * int32 slots; -1 encodes a never-marked variable. `awd` is NaN for a
 * core. */
sls_status sls_whiten(const sls_instance *inst, const uint8_t *values, int32_t *outcome,
                      double *awd, int32_t *depths);

/* {outcome, awd, depth_histogram} as JSON. */
sls_status sls_whiten_json(const sls_instance *inst, const uint8_t *values, char **text,
                           size_t *length);

/* ------------------------------------------------------------------ */
/* Experiment harness                                                 */
/*                                                                    */
/* Each runner writes CSV (curves, `# plan {...}` provenance comment) */
/* or JSON lines (raw records, first line {"plan": ...}) to out_path; */
/* "-" or NULL writes to stdout. Outputs embed no wall-clock values.  */

typedef enum sls_format { SLS_FORMAT_CSV = 0, SLS_FORMAT_JSON = 1 } sls_format;

typedef struct sls_plan {
  sls_algorithm algorithm;
  int32_t k;
  int32_t n;
  double alpha;
  double eta;
  double noise;
  double p1;
  double p2;
  int32_t trials;
  double cutoff;
  uint64_t master_seed;
  int32_t threads; /* 0 = hardware concurrency */
} sls_plan;

/* Empirical CDF of solution times (flips per variable) over fresh
 * instances, censored at the cutoff. */
sls_status sls_cdf(const sls_plan *plan, sls_format format, const char *out_path);

typedef enum sls_scan_parameter {
  SLS_SCAN_ETA = 0,
  SLS_SCAN_NOISE = 1,
  SLS_SCAN_P1 = 2,
  SLS_SCAN_P2 = 3
} sls_scan_parameter;

/* Fraction solved per grid value; mean flips per variable only where all
 * trials solved. */
sls_status sls_scan(const sls_plan *plan, sls_scan_parameter parameter, const double *grid,
                    size_t grid_length, sls_format format, const char *out_path);

typedef struct sls_xsat_plan {
  int32_t k;
  int32_t n;
  double alpha;
  double eta;
  double cutoff;
  const double *distances;
  size_t distance_count;
  int32_t searches_per_distance;
  double window; /* moving window for the CSV percentile bands */
  uint64_t master_seed;
  int32_t threads;
} sls_xsat_plan;

/* Distance-constrained searches around one reference solution. JSON
 * emits the raw (x_init, x_final) records; CSV emits the moving-window
 * 10/90-percentile bands. */
sls_status sls_xsat(const sls_xsat_plan *plan, sls_format format, const char *out_path);

typedef struct sls_chain_stats_plan {
  const int32_t *ks;
  size_t k_count;
  const double *alphas;
  size_t alpha_count;
  int32_t n;
  double p1;
  double p2;
  int32_t trials;
  double cutoff; /* iterations per variable */
  uint64_t master_seed;
  int32_t threads;
} sls_chain_stats_plan;

/* Mean chain length and mean whiteness depth per (K, alpha) cell, with
 * alpha normalized by the K-SAT threshold reference values. */
sls_status sls_chain_stats(const sls_chain_stats_plan *plan, sls_format format,
                           const char *out_path);

/* Threshold reference value alpha_sat(K) for K in {3,4,5,6}; 0 otherwise. */
double sls_alpha_sat(int32_t k);

#ifdef __cplusplus
}
#endif

#endif /* SLSLAB_H */
