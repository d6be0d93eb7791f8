/*
 * mmcut - max-cut bounds, certificates and simulations for the
 * exceptional-divisor multigraphs of minuscule blow-ups.
 *
 * All functions return MMCUT_OK (0) on success or a negative-free error
 * code; a human-readable message for the last failure on the calling
 * thread is available from mmcut_last_error(). Reports are returned as
 * malloc'd JSON strings that must be released with mmcut_string_free().
 */
#ifndef MMCUT_H
#define MMCUT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mmcut_status {
    MMCUT_OK = 0,
    MMCUT_EINVAL = 1,   /* bad parameters, malformed input */
    MMCUT_ESIZE = 2,    /* size/safety bound exceeded */
    MMCUT_ECERT = 3,    /* an exact identity failed to verify */
    MMCUT_EIO = 4,      /* file I/O failure */
    MMCUT_ENOMEM = 5,   /* allocation failure */
    MMCUT_EINTERNAL = 6 /* unexpected internal error */
} mmcut_status;

typedef struct mmcut_params mmcut_params; /* opaque: validated (a,b,c) */
typedef struct mmcut_graph mmcut_graph;   /* opaque: weighted multigraph */

const char* mmcut_status_name(mmcut_status status);

/* Message for the most recent failure on this thread ("" if none). */
const char* mmcut_last_error(void);

void mmcut_string_free(char* s);

/* ---- parameters ---------------------------------------------------- */

mmcut_status mmcut_params_create(int a, int b, int c, mmcut_params** out);

/* Family shorthand: "typeA:r,s" | "typeD:r" | "e6" | "e7". */
mmcut_status mmcut_params_parse(const char* family, mmcut_params** out);

void mmcut_params_destroy(mmcut_params* p);

/* Family, derived quantities and the orbit size, as JSON. */
mmcut_status mmcut_params_describe(const mmcut_params* p, char** json);

/* ---- graphs --------------------------------------------------------- */

/* Exceptional-divisor multigraph from the Weyl orbit of E_r. */
mmcut_status mmcut_graph_build(const mmcut_params* p, mmcut_graph** out);

/* Combinatorial subset model (type A/D families only). */
mmcut_status mmcut_graph_build_model(const mmcut_params* p, mmcut_graph** out);

mmcut_status mmcut_graph_from_json(const char* json, mmcut_graph** out);
mmcut_status mmcut_graph_to_json(const mmcut_graph* g, char** json);
int mmcut_graph_order(const mmcut_graph* g);
void mmcut_graph_destroy(mmcut_graph* g);

/* ---- analyses ------------------------------------------------------- */

/* Exact SD(f) = SD*(gamma) certificate plus closed-form bounds. */
mmcut_status mmcut_certify(const mmcut_params* p, char** json);

/* Spectrum report for an arbitrary multigraph (strong regularity is
 * verified first) or for a parameter set (closed form, exact check). */
mmcut_status mmcut_spectrum_graph(const mmcut_graph* g, char** json);
mmcut_status mmcut_spectrum(const mmcut_params* p, char** json);

/* Closed-form bounds ell/u with exact integer rounding. */
mmcut_status mmcut_bounds(const mmcut_params* p, char** json);

/* Seeded random-hyperplane rounding on the optimal embedding. */
mmcut_status mmcut_simulate(const mmcut_params* p, uint64_t samples, uint64_t seed, int threads,
                            char** json);

/* Exact max cut when the graph is small enough, else local search.
 * force_local skips the exhaustive scan regardless of size. */
mmcut_status mmcut_oracle(const mmcut_graph* g, uint64_t restarts, uint64_t seed, int threads,
                          int force_local, char** json);

/* One simulation row (mean / max found / SD / cv) with integer bounds. */
mmcut_status mmcut_full_report(const mmcut_params* p, uint64_t samples, uint64_t seed,
                               uint64_t restarts, int threads, char** json);

/* Lattice-vs-subset-model agreement report (type A/D). */
mmcut_status mmcut_model_agreement(const mmcut_params* p, char** json);

/* Evaluates the paper-literal formula variants against the corrected
 * implementation. Returns MMCUT_ECERT when any check is refuted; *json is
 * filled with the diff record either way. */
mmcut_status mmcut_paper_literal(const mmcut_params* p, char** json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MMCUT_H */
