/* C interface to the bisym kernel.
 *
 * All entry points return a bisym_status; results come back through out
 * parameters.  Strings returned through char** are heap-allocated and must be
 * released with bisym_string_free; handles must be released with the matching
 * _destroy call.  On failure the out parameter is left untouched and
 * bisym_last_error() describes what went wrong (per thread).
 */

#ifndef BISYM_H
#define BISYM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bisym_status {
    BISYM_OK = 0,
    BISYM_ERR_INVALID_ARGUMENT = 1, /* bad pointer, name, or flag value */
    BISYM_ERR_PARSE = 2,            /* malformed expression text */
    BISYM_ERR_DOMAIN = 3,           /* violated operation precondition */
    BISYM_ERR_OVERFLOW = 4,         /* grading left the active window */
    BISYM_ERR_INTERNAL = 5          /* anything unexpected */
} bisym_status;

typedef struct bisym_series bisym_series_t; /* a truncated bisymmetric series */
typedef struct bisym_report bisym_report_t; /* a Schur-pair decomposition */

/* Parse and evaluate an expression (see docs/expressions.md) inside the
 * truncation [deg_x, deg_y] x [hbar_min, hbar_max]. */
bisym_status bisym_eval(const char* expr, int deg_x, int deg_y, int hbar_min,
                        int hbar_max, bisym_series_t** out);

/* Render a series.  basis is "p" or "schur", format is "text" or "json". */
bisym_status bisym_series_render(const bisym_series_t* s, const char* basis,
                                 const char* format, char** out);

/* Sets *out to 1 if the evaluation discarded data at a truncation boundary
 * along the way (the result is still exact in the quotient), 0 otherwise. */
bisym_status bisym_series_dropped(const bisym_series_t* s, int* out);

void bisym_series_destroy(bisym_series_t* s);

/* Stable decomposition of the degree-d cohomology-style report for one of
 * the named bimodules: variant is "Q", "Qtilde" or "Qprime"; q_max / p_max
 * bound the x / y weights; threads bounds worker parallelism (0 or 1 runs
 * single-threaded). */
bisym_status bisym_autfn(const char* variant, int d, int q_max, int p_max,
                         int threads, bisym_report_t** out);

/* Render a report.  format is "text" (tab-separated) or "json". */
bisym_status bisym_report_render(const bisym_report_t* r, const char* format,
                                 char** out);

void bisym_report_destroy(bisym_report_t* r);

/* Albanese-count table for d = 1..d_max, rendered directly: format "text"
 * and "csv" both yield CSV with header "d,n_irr,sum_mult"; "json" yields an
 * array of row objects. */
bisym_status bisym_counts(int d_max, int threads, const char* format,
                          char** out);

void bisym_string_free(char* s);

/* Message for the most recent failure on this thread ("" if none). */
const char* bisym_last_error(void);

/* Static description of a status code. */
const char* bisym_status_message(bisym_status st);

#ifdef __cplusplus
}
#endif

#endif /* BISYM_H */
