/*
 * contraction_lab.h — C API of the contraction certification toolkit.
 *
 * Instances (a finite metric space, a self-map, a comparison function phi,
 * and optionally a declared contraction condition) are loaded from JSON and
 * held behind opaque handles. Every operation produces an immutable report
 * handle carrying a JSON document, a plain-text rendering, and an exit code
 * (0 certified/success, 1 violated/expectation failure, 2 indeterminate).
 *
 * All functions return CLAB_OK on success or a nonzero status; the message
 * for the most recent failure on the calling thread is available through
 * clab_last_error(). Out-parameters are written only on CLAB_OK unless
 * stated otherwise. Handles are freed with the matching *_free function;
 * strings returned by accessors stay owned by their handle.
 */

#ifndef CONTRACTION_LAB_H
#define CONTRACTION_LAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct clab_instance clab_instance;
typedef struct clab_report clab_report;

typedef enum clab_status {
    CLAB_OK = 0,
    CLAB_VIOLATED = 1,          /* operation ran; condition violated */
    CLAB_INDETERMINATE = 2,     /* operation ran; approximate margin unresolved */
    CLAB_ERR_PARSE = 10,        /* malformed JSON or rational */
    CLAB_ERR_INVARIANT = 11,    /* construction invariant violated */
    CLAB_ERR_BUDGET = 12,       /* orbit not periodic within the step budget */
    CLAB_ERR_IO = 13,           /* file not readable/writable */
    CLAB_ERR_BAD_ARGUMENT = 14, /* null/unknown argument */
    CLAB_ERR_INTERNAL = 15
} clab_status;

const char* clab_version(void);

/* Thread-local message describing the most recent failure on this thread. */
const char* clab_last_error(void);

/* ---- instances -------------------------------------------------------- */

clab_status clab_instance_load_file(const char* path, clab_instance** out);
clab_status clab_instance_load_string(const char* json_text, clab_instance** out);

/* Bundled instances: "example7", "example10", "example13". window_max <= 0
 * selects the default window (200 for the integer windows). */
clab_status clab_instance_corpus(const char* name, long window_max, clab_instance** out);

void clab_instance_free(clab_instance* instance);

long clab_instance_point_count(const clab_instance* instance);
/* NULL when index is out of range. */
const char* clab_instance_point_label(const clab_instance* instance, long index);

/* Serialized instance document (replayable by the load functions). */
clab_status clab_instance_to_json(const clab_instance* instance, clab_report** out);

/* ---- options ---------------------------------------------------------- */

/* Contraction condition. Coefficient strings are exact rationals ("5/6");
 * NULL means 0. Variants: "type1", "type2", "type3", "hardy-rogers",
 * "hegedus-szilagyi", "tmmax". */
typedef struct clab_contraction {
    const char* variant;
    const char* alpha;
    const char* beta;
    const char* gamma;
    const char* delta;
    const char* mu;
    /* type1 only: also certify the condition over Fix(f) x Fix(f). */
    int include_fixed_points;
} clab_contraction;

typedef struct clab_options {
    long max_steps;        /* 0: window size + 1 */
    int precision_digits;  /* 0: CONTRACTION_LAB_PRECISION env or 30 */
    int skip_phi_check;    /* nonzero: skip phi property checks (recorded) */
    int threads;           /* 0: hardware concurrency */
    long window_max;       /* corpus instances built by this call; 0: default */
} clab_options;

/* ---- operations ------------------------------------------------------- */

clab_status clab_check_metric(const clab_instance* instance, clab_report** out);

/* epsilons: property (2) witnesses to produce, as rational strings. */
clab_status clab_phi_check(const clab_instance* instance, const char* const* epsilons,
                           size_t n_epsilons, clab_report** out);

clab_status clab_orbit(const clab_instance* instance, const char* point_label,
                       const clab_options* options, clab_report** out);

clab_status clab_fixpoints(const clab_instance* instance, clab_report** out);

clab_status clab_iterate(const clab_instance* instance, const char* from_label,
                         const clab_options* options, clab_report** out);

/* contraction == NULL uses the instance's declared condition. Returns
 * CLAB_OK / CLAB_VIOLATED / CLAB_INDETERMINATE with the report set in all
 * three cases. */
clab_status clab_certify(const clab_instance* instance, const clab_contraction* contraction,
                         const clab_options* options, clab_report** out);

/* Certification plus the fixed-point theorem conclusions. */
clab_status clab_validate(const clab_instance* instance, const clab_contraction* contraction,
                          const clab_options* options, clab_report** out);

clab_status clab_compare(const clab_instance* instance, const clab_contraction* condition_a,
                         const clab_contraction* condition_b, const clab_options* options,
                         clab_report** out);

/* target: "theorem:type2" / "separation:type3,tmmax" / ... inject_corpus:
 * corpus names injected at the head of the instance stream (may be NULL).
 * Returns CLAB_OK with an empty findings list, or CLAB_VIOLATED when
 * findings exist (each finding embeds a replayable instance document). */
clab_status clab_falsify(const char* target, uint64_t seed, long trials,
                         const char* const* inject_corpus, size_t n_inject,
                         const clab_options* options, clab_report** out);

clab_status clab_corpus_run(long window_max, const clab_options* options, clab_report** out);

/* ---- reports ---------------------------------------------------------- */

const char* clab_report_json(const clab_report* report);
const char* clab_report_pretty(const clab_report* report);
int clab_report_exit_code(const clab_report* report);
void clab_report_free(clab_report* report);

#ifdef __cplusplus
}
#endif

#endif /* CONTRACTION_LAB_H */
