/* qwhit: exact computation of q-deformed gl(n) Whittaker functions by four
 * independent constructions, with machine verification of the identities
 * connecting them.
 *
 * The library computes with exact arbitrary-precision arithmetic over
 * Q(q^{1/2}); values are multivariate Laurent polynomials handled through
 * opaque handles and serialized to a canonical JSON form (see README).
 * All functions return QWHIT_OK on success; on failure the thread-local
 * message from qwhit_last_error() describes the problem.
 */
#ifndef QWHIT_H
#define QWHIT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qwhit_value qwhit_value; /* opaque Laurent-polynomial value */

typedef enum {
    QWHIT_OK = 0,
    QWHIT_ERR_INVALID = 1,   /* malformed input: partition order, rank range, parse */
    QWHIT_ERR_POLE = 2,      /* pole or vanishing factor at the requested spec */
    QWHIT_ERR_DEGENERATE = 3,/* Gram data singular at the requested (q,t) */
    QWHIT_ERR_INEXACT = 4,   /* an exact-division assertion failed (library bug) */
    QWHIT_ERR_INTERNAL = 5
} qwhit_status;

/* rank = number of variables (2..4); point = rank integers. */

/* Whittaker function at a lattice point as the Gelfand-Zetlin sum; when
 * normalized != 0 the value is multiplied by prod (p_i - p_{i+1})_q!
 * (normalization requires a weakly decreasing point). */
qwhit_status qwhit_whittaker(int rank, const long* point, int normalized, qwhit_value** out);

/* Macdonald polynomial for a weakly decreasing lambda (entries may be
 * negative). The parameter t is selected by exactly one of:
 *   t_rational != NULL        exact numeric t (q_rational must be set too)
 *   k != 0 via use_qk != 0    t = q^{-k} with symbolic q
 *   neither                   t = 0 with symbolic q
 * q_rational may be NULL for symbolic q. Rationals are "a" or "a/b". */
qwhit_status qwhit_macdonald(int rank, const long* lambda, const char* q_rational,
                             const char* t_rational, int use_qk, long k, qwhit_value** out);

/* pi-image of the affine Demazure character attached to the dominant point p
 * (the value q^c * pi(ch) equals the normalized Whittaker function at p). */
qwhit_status qwhit_demazure(int rank, const long* point, int include_prefactor,
                            qwhit_value** out);

/* Normalized Whittaker function as a quantum-torus matrix element. */
qwhit_status qwhit_torus(int rank, const long* point, qwhit_value** out);

/* Canonical JSON serialization; the returned string is freed with
 * qwhit_string_free. Round-trips through qwhit_value_parse. */
qwhit_status qwhit_value_to_json(const qwhit_value* value, char** json_out);
qwhit_status qwhit_value_to_text(const qwhit_value* value, char** text_out);
qwhit_status qwhit_value_parse(const char* json, qwhit_value** out);

/* 1 when equal as exact values, 0 otherwise. */
int qwhit_value_equal(const qwhit_value* a, const qwhit_value* b);

void qwhit_value_free(qwhit_value* value);
void qwhit_string_free(char* text);

/* Verification suites. suite is one of: fourway eiglat modpsi spectra
 * selfdual corSan reclimt0 norms noncomm demlaws all. rank 0 runs the suite
 * defaults (ranks 2 and 3). box/trunc are optional overrides (pass 0,0 to
 * keep the defaults; box_set selects whether lo/hi apply). The JSON report is
 * freed with qwhit_string_free; *all_pass is 1 when every check passed. */
qwhit_status qwhit_verify(const char* suite, int rank, int box_set, long box_lo, long box_hi,
                          long trunc, char** report_json, int* all_pass);

const char* qwhit_status_name(qwhit_status status);

/* Thread-local description of the most recent failure. */
const char* qwhit_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* QWHIT_H */
