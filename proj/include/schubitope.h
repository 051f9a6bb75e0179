/* C API for the schubitope library.
 *
 * Every entry point returns an opaque result handle carrying a status code,
 * a JSON document on success, and a diagnostic message on failure. Handles
 * must be released with stp_result_free. All inputs are UTF-8 C strings in
 * the CLI text formats: permutations "365142" or "[3,6,5,1,4,2]",
 * compositions "4,1,3,0,2", diagrams "1,3;2,3;1" with an explicit ambient n.
 */
#ifndef SCHUBITOPE_H
#define SCHUBITOPE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    STP_OK = 0,         /* success; JSON document available */
    STP_SUITE_FAIL = 1, /* verification suite ran and found failures */
    STP_BAD_INPUT = 2,  /* malformed input; see stp_result_error */
    STP_INTERNAL = 3    /* internal invariant fault */
} stp_status;

typedef struct stp_result stp_result;

stp_status stp_result_status(const stp_result* result);
/* JSON document; empty string when status is STP_BAD_INPUT/STP_INTERNAL. */
const char* stp_result_json(const stp_result* result);
/* Diagnostic message; empty string on success. */
const char* stp_result_error(const stp_result* result);
void stp_result_free(stp_result* result);

const char* stp_version(void);

/* kind: "rothe" (permutation), "skyline" (composition), "parse" (diagram
 * string, requires n > 0). n is ignored for rothe/skyline. */
stp_result* stp_diagram(const char* kind, const char* input, int n);

/* rows: comma-separated row indices, "" for the empty subset. */
stp_result* stp_theta(const char* diagram, int n, const char* rows);

/* Lattice points of the t-dilated schubitope through both backends. */
stp_result* stp_points(const char* diagram, int n, int t);

/* kind: "perm" | "comp" | "diagram" (requires n > 0). */
stp_result* stp_lattice_free(const char* kind, const char* input, int n);

/* Ehrhart polynomial of the schubitope plus the per-column factorization. */
stp_result* stp_ehrhart(const char* kind, const char* input, int n);

/* family: "schubert" | "grothendieck" | "key". */
stp_result* stp_poly(const char* family, const char* input);
stp_result* stp_newton(const char* family, const char* input);

/* suite: "schubitope-criterion" | "schubert" | "grothendieck" | "key".
 * options_json: {"n":5,"max_part":3,"max_len":4,"seed":0,"jobs":0,
 *                "fail_fast":false,"random_diagrams":200,"timing":true},
 * all fields optional; NULL or "" means defaults. Status is STP_SUITE_FAIL
 * when the report contains failures. */
stp_result* stp_verify(const char* suite, const char* options_json);

#ifdef __cplusplus
}
#endif

#endif /* SCHUBITOPE_H */
