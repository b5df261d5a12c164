#ifndef BRANCHMC_H
#define BRANCHMC_H

/* C interface to the branching-walk Cauchy problem solver. All entry points
 * return BMC_OK or an error code; bmc_last_error() describes the most recent
 * failure on the calling thread. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define BMC_OK 0
#define BMC_ERR_INVALID 1  /* unknown problem, bad dimension or argument */
#define BMC_ERR_BLOWUP 2   /* tree hit the node cap */
#define BMC_ERR_NUMERIC 3  /* non-finite factor during evaluation */
#define BMC_ERR_BUFFER 4   /* output buffer too small */
#define BMC_ERR_INTERNAL 5

typedef struct bmc_problem bmc_problem;

typedef struct bmc_estimate {
  double mean_re, mean_im;
  double stderr_re, stderr_im;
  long long n_paths;
  long long n_blowups;     /* paths discarded at the node cap; nonzero flags the row */
  long long max_tree_size;
} bmc_estimate;

typedef struct bmc_moment_report {
  double t_max;   /* largest horizon with a finite moment bound (may be +inf) */
  double r_p;
  double alpha_p;
  int pass;       /* nonzero when t <= t_max */
  int has_bound;  /* zero when the problem carries no growth bound */
} bmc_moment_report;

/* Problems: klein-gordon (dim 1..3), yang-mills (1), beam (1),
 * gross-pitaevskii, linear-heat, linear-schrodinger (dim 1..8),
 * linear-wave (1). */
int bmc_problem_create(const char* name, int dim, bmc_problem** out);
void bmc_problem_destroy(bmc_problem* p);

int bmc_problem_set_beta(bmc_problem* p, double beta);
int bmc_problem_dim(const bmc_problem* p);
int bmc_problem_has_exact(const bmc_problem* p);
/* x points at dim coordinates. */
int bmc_problem_exact(const bmc_problem* p, double t, const double* x,
                      double* out_re, double* out_im);

/* Monte-Carlo estimate of the solution at (t, x) over n_paths trees. The
 * result is bit-identical for any thread count at fixed seed. threads <= 0
 * means single-threaded. */
int bmc_solve(const bmc_problem* p, double t, const double* x, long long n_paths,
              uint64_t seed, int threads, long long node_cap, bmc_estimate* out);

/* Moment growth check at horizon t and moment order p_order (uses the
 * problem's current beta). */
int bmc_moment_check(const bmc_problem* p, double t, double p_order,
                     bmc_moment_report* out);

/* Text dump of the tree grown from (t, x) under the given seed, one particle
 * per line, followed by the functional value. *n_written receives the full
 * text length excluding the terminator; if it exceeds cap - 1 nothing else is
 * written and BMC_ERR_BUFFER is returned. */
int bmc_tree_dump(const bmc_problem* p, double t, const double* x, uint64_t seed,
                  long long node_cap, char* buf, size_t cap, size_t* n_written);

const char* bmc_last_error(void);

int bmc_problem_count(void);
const char* bmc_problem_name(int index);

#ifdef __cplusplus
}
#endif

#endif /* BRANCHMC_H */
