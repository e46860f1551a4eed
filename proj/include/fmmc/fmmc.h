#ifndef FMMC_H
#define FMMC_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(FMMC_BUILDING)
#    define FMMC_API __declspec(dllexport)
#  else
#    define FMMC_API __declspec(dllimport)
#  endif
#else
#  define FMMC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as CLI exit codes. */
typedef enum fmmc_status {
    FMMC_OK = 0,
    FMMC_ERR_INVALID = 1,
    FMMC_ERR_PARSE = 2,
    FMMC_ERR_INFEASIBLE = 3,
    FMMC_ERR_CONSISTENCY = 4,
    FMMC_ERR_REPRODUCE = 5,
    FMMC_ERR_INTERNAL = 6
} fmmc_status;

typedef enum fmmc_method {
    FMMC_METHOD_AUTO = 0,
    FMMC_METHOD_CLOSED = 1,
    FMMC_METHOD_NUMERIC = 2,
    FMMC_METHOD_METROPOLIS = 3
} fmmc_method;

typedef struct fmmc_options {
    int method;       /* fmmc_method */
    uint64_t seed;    /* numeric solver seed */
    double tol;       /* solver stall tolerance; <= 0 keeps the default */
    int max_iters;    /* per numeric run; <= 0 keeps the default */
} fmmc_options;

typedef struct fmmc_instance fmmc_instance;
typedef struct fmmc_result fmmc_result;

FMMC_API const char* fmmc_version(void);

/* Message of the last failed call on this thread; empty when none. */
FMMC_API const char* fmmc_last_error(void);

FMMC_API void fmmc_options_init(fmmc_options* opts);

/* Instance JSON: {"n", "edges", "pi"} with 1-based ids, or {"family", "params", "pi"};
   optional "id" and "subgraphs". */
FMMC_API fmmc_status fmmc_instance_parse(const char* json, fmmc_instance** out);
FMMC_API int fmmc_instance_size(const fmmc_instance* inst);
FMMC_API void fmmc_instance_free(fmmc_instance* inst);

FMMC_API fmmc_status fmmc_solve(const fmmc_instance* inst, const fmmc_options* opts, fmmc_result** out);

/* Optimal chain against the Metropolis chain. */
FMMC_API fmmc_status fmmc_compare(const fmmc_instance* inst, const fmmc_options* opts, fmmc_result** out);

/* base_result: a solve result document; lift_spec: {"base": graph, "fibers": [...]};
   lifted_pi: {"pi": [...]} or a bare array. */
FMMC_API fmmc_status fmmc_lift(const char* base_result, const char* lift_spec, const char* lifted_pi, fmmc_result** out);

/* family may be NULL for all items; tol < 0 keeps the per-item tolerances.
   Returns FMMC_ERR_REPRODUCE with a populated result when any item fails. */
FMMC_API fmmc_status fmmc_reproduce(const char* family, double tol, uint64_t seed, fmmc_result** out);

/* Deterministic JSON document (sorted keys, 9 significant digits). */
FMMC_API const char* fmmc_result_json(const fmmc_result* res);
/* Human-readable summary. */
FMMC_API const char* fmmc_result_text(const fmmc_result* res);
/* SLEM of the optimal chain; NaN for reproduce results. */
FMMC_API double fmmc_result_slem(const fmmc_result* res);
FMMC_API void fmmc_result_free(fmmc_result* res);

#ifdef __cplusplus
}
#endif

#endif
