/* C interface of the mindist solver library.
 *
 * All objects are opaque handles created and released through this API.
 * Functions return MDC_OK (0) on success or a negative error code; the
 * last error message of the calling thread is available through
 * mdc_last_error().
 */
#ifndef MINDIST_MINDIST_H
#define MINDIST_MINDIST_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define MDC_API __declspec(dllexport)
#else
#define MDC_API __attribute__((visibility("default")))
#endif

typedef struct mdc_instance mdc_instance;
typedef struct mdc_result mdc_result;

enum {
  MDC_OK = 0,
  MDC_ERR_INVALID_ARGUMENT = -1,
  MDC_ERR_IO = -2,
  MDC_ERR_PARSE = -3,
  MDC_ERR_INTERNAL = -4
};

typedef enum {
  MDC_STATUS_OPTIMAL = 0,
  MDC_STATUS_GAP_REACHED = 1,
  MDC_STATUS_TIME_LIMIT = 2,
  MDC_STATUS_NODE_LIMIT = 3,
  MDC_STATUS_INFEASIBLE = 4
} mdc_solve_status;

typedef enum {
  MDC_RED_PROP1 = 0,
  MDC_RED_LOCATELLI = 1,
  MDC_RED_PAIR_GEO = 2,
  MDC_RED_PAIR_BISECT = 3
} mdc_reduction_kind;

/* Solver settings; initialize with mdc_settings_init before use. */
typedef struct {
  int mindc_reductions; /* 0 disables all minDC reduction algorithms */
  int heur;             /* 0: facet shrinking + propagation, 1: propagation */
  int pair;             /* 1: reductions from constraint pairs */
  int rotsym;           /* 1: rotation-symmetry cuts */
  int cutfreq;          /* simplex cuts every k-th depth; 0 disables */
  int lex_rows;         /* honor row lex ordering where the instance has it */
  int lex_cols;
  double gap;           /* relative optimality gap, default 0.005 */
  double time_limit;    /* seconds, default 7200 */
  long node_limit;      /* negative: unlimited */
  unsigned seed;
} mdc_settings;

MDC_API void mdc_settings_init(mdc_settings* settings);

/* Instance builders. reflect != 0 pins the first point to nonnegative
 * coordinates (pack_in_sphere only). */
MDC_API int mdc_instance_pack_in_sphere(int n, int dim, int reflect,
                                        mdc_instance** out);
MDC_API int mdc_instance_kissing(int n, int dim, mdc_instance** out);
MDC_API int mdc_instance_pack_in_box(int n, int dim, mdc_instance** out);

MDC_API int mdc_instance_load(const char* path, mdc_instance** out);
MDC_API int mdc_instance_save(const mdc_instance* inst, const char* path);
MDC_API void mdc_instance_free(mdc_instance* inst);

MDC_API int mdc_instance_num_vars(const mdc_instance* inst);
MDC_API const char* mdc_instance_name(const mdc_instance* inst);

MDC_API int mdc_solve(const mdc_instance* inst, const mdc_settings* settings,
                      mdc_result** out);
MDC_API void mdc_result_free(mdc_result* result);

MDC_API mdc_solve_status mdc_result_status(const mdc_result* result);
MDC_API int mdc_result_has_incumbent(const mdc_result* result);
MDC_API double mdc_result_primal(const mdc_result* result);
MDC_API double mdc_result_dual(const mdc_result* result);
MDC_API double mdc_result_gap(const mdc_result* result);
MDC_API long mdc_result_nodes(const mdc_result* result);
MDC_API double mdc_result_time(const mdc_result* result);
MDC_API long mdc_result_cuts(const mdc_result* result);
MDC_API long mdc_result_reductions(const mdc_result* result,
                                   mdc_reduction_kind kind);
/* Copies min(len, num_vars) solution values into buf; returns the number
 * of values written, or 0 when there is no incumbent. */
MDC_API int mdc_result_solution(const mdc_result* result, double* buf,
                                int len);

MDC_API const char* mdc_status_name(mdc_solve_status status);
MDC_API const char* mdc_last_error(void);
MDC_API const char* mdc_version(void);

#ifdef __cplusplus
}
#endif

#endif /* MINDIST_MINDIST_H */
