/*
 * C interface to the hypercycle characteristic-polynomial library.
 *
 * All functions that can fail return an hc_status; HC_OK is 0. On failure a
 * human-readable message is available from hc_last_error() until the next
 * call on the same thread. Strings returned through char** out-parameters
 * are heap-allocated and must be released with hc_string_free(); factored
 * polynomials are opaque handles released with hc_charpoly_free().
 *
 * All big integers cross this interface as decimal strings.
 */
#ifndef HYPERCYCLE_H
#define HYPERCYCLE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
    HC_OK = 0,
    HC_ERR_PARAM = 1,             /* invalid argument / domain violation */
    HC_ERR_DIMENSION = 2,         /* matrix shape mismatch */
    HC_ERR_SINGULAR = 3,          /* singular matrix */
    HC_ERR_UNSUPPORTED_ORDER = 4, /* trace order outside the derived range */
    HC_ERR_BUDGET = 5,            /* enumeration/expansion budget exceeded */
    HC_ERR_INTERNAL = 6,          /* internal consistency assertion failed */
    HC_ERR_VERIFY = 7             /* a verification suite reported failures */
} hc_status;

/* Opaque factored characteristic polynomial. */
typedef struct hc_charpoly hc_charpoly;

const char* hc_version(void);
const char* hc_status_name(hc_status status);
/* Message for the most recent failure on this thread ("" if none). */
const char* hc_last_error(void);

void hc_string_free(char* s);
void hc_charpoly_free(hc_charpoly* poly);

/* Factored characteristic polynomial of the r-uniform hypercycle of length
 * l (r >= 3, l >= 3). */
hc_status hc_charpoly_compute(int r, int l, hc_charpoly** out);

/* In-place canonicalization (mu-powers into the lambda exponent, rational
 * roots split off, duplicate blocks merged). */
hc_status hc_charpoly_canonicalize(hc_charpoly* poly);

/* format: "text", "latex" or "json". */
hc_status hc_charpoly_render(const hc_charpoly* poly, const char* format, char** out);

hc_status hc_charpoly_parse_json(const char* json_text, hc_charpoly** out);

/* Total degree as a decimal string. */
hc_status hc_charpoly_degree(const hc_charpoly* poly, char** out);

/* Expanded coefficients, one "exponent coefficient" pair per line, ascending,
 * zero coefficients omitted. Fails with HC_ERR_BUDGET if the degree exceeds
 * max_degree. */
hc_status hc_charpoly_expand(const hc_charpoly* poly, long max_degree, char** out);

/* Spectrum membership check at the given tolerance; *pass gets 0/1, *report
 * a diagnostic table. */
hc_status hc_charpoly_spectrum_check(const hc_charpoly* poly, double tol, int* pass,
                                     char** report);

/* Closed-form trace of order d*r (1 <= d <= l), decimal string. */
hc_status hc_trace(int r, int l, int d, char** out);

/* Closed-form trace of any order up to l*r (zero off multiples of r). */
hc_status hc_trace_order(int r, int l, long order, char** out);

/* Ground-truth trace by Eulerian-circuit enumeration. budget <= 0 selects
 * the default (1e8); jobs <= 1 runs serially. */
hc_status hc_brute_trace(int r, int l, long order, long budget, int jobs, char** out);

/* Run a verification suite: "identities", "lemma-minors", "oracle" or
 * "corollaries". r/l restrict the grid when positive. *all_pass gets 0/1 and
 * *report the pass/fail table. Returns HC_OK even when checks fail (that is
 * what *all_pass reports); errors mean the suite could not run. */
hc_status hc_verify(const char* suite, int r, int l, long budget, int jobs, int* all_pass,
                    char** report);

/* Squared-eigenvalue table of the assembled polynomial with multiplicities,
 * plus the numeric membership verdict. */
hc_status hc_spectrum_report(int r, int l, double tol, int* pass, char** report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HYPERCYCLE_H */
