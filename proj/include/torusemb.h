/* torusemb - decides which maps of a closed surface into the 3-torus are
 * homotopic to embeddings, from the induced first-homology matrix alone, and
 * produces a constructive surgery witness when they are.
 *
 * C interface of the shared library. All functions returning te_status leave
 * a diagnostic retrievable through te_last_error() on failure. Handles are
 * opaque; free them with the matching *_free call. Returned strings are
 * owned by their handle unless documented otherwise.
 */
#ifndef TORUSEMB_H
#define TORUSEMB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum te_status {
    TE_OK = 0,
    TE_ERROR_INVALID_ARGUMENT = 1, /* bad genus, shape, or option value */
    TE_ERROR_PARSE = 2,            /* malformed job document */
    TE_ERROR_INTERNAL = 3
} te_status;

typedef struct te_map te_map;       /* a surface plus its H1 matrix */
typedef struct te_result te_result; /* verdict, report, optional witness */

const char* te_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* te_last_error(void);

/* Creates a map from rows x cols entries in row-major order.
 *   surface_kind: "orientable" | "nonorientable"
 *   basis:        "standard"   | "crosscap"
 * Standard input is 3 x (free rank); crosscap input is 3 x h with zero
 * column sums (the torsion generator must map to zero). */
te_status te_map_create(const char* surface_kind, long genus, const char* basis,
                        const int64_t* entries, size_t rows, size_t cols, te_map** out);

/* Creates a map from a JSON job document:
 *   { "surface": {"type": ..., "genus": ...},
 *     "basis": "standard"|"crosscap",
 *     "matrix": [[...], [...], [...]],
 *     "options": {"report": "verdict"|"full", "witness": bool} }
 * Matrix entries may be integers or decimal strings. */
te_status te_map_from_job_json(const char* json_text, te_map** out);

void te_map_free(te_map* map);

/* Decides embeddability. want_witness / full_report: 1 = yes, 0 = no,
 * -1 = inherit the job document's options (defaults off). */
te_status te_map_decide(const te_map* map, int want_witness, int full_report, te_result** out);

int te_result_embeddable(const te_result* result); /* 1 or 0 */
const char* te_result_case(const te_result* result);
const char* te_result_report_json(const te_result* result);
void te_result_free(te_result* result);

/* Deterministic random sampling: one JSON line per map with a verdict
 * summary. surface_kind as above. *out_text is malloc'd; release it with
 * te_text_free. */
te_status te_sample_jsonl(const char* surface_kind, long genus, long bound, long count,
                          uint64_t seed, char** out_text);

void te_text_free(char* text);

/* Runs the built-in acceptance checks. Prints one PASS/FAIL line per check
 * to stdout when verbose is nonzero. Returns the number of failed checks. */
int te_selftest(int verbose);

#ifdef __cplusplus
}
#endif

#endif /* TORUSEMB_H */
