#ifndef CANTOR_H
#define CANTOR_H

/* C interface to libcantor: exact symbolic dynamics on generalized Cantor
 * space {0,1}^A.
 *
 * Values are opaque handles created by the parse functions and released
 * with the matching free.  Functions returning cantor_status signal
 * failure through the code and leave a message in cantor_last_error();
 * predicate functions return 0/1 and -1 on error.  Strings returned
 * through char** are owned by the caller and released with
 * cantor_string_free.
 *
 * Grammars (also used by the CLI):
 *   point    := "zero" | fiber "=" transient "|" period (";" ...)*
 *   cylinder := "{}" | "{" fiber ":" pos "=" bit ("," ...)* "}"
 *   index    := "<{" fiber ("," fiber)* "}," k ">"
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cantor_status {
  CANTOR_OK = 0,
  CANTOR_ERR_PARSE = 1,        /* malformed text */
  CANTOR_ERR_PRECONDITION = 2, /* operation contract violated */
  CANTOR_ERR_ARGUMENT = 3,     /* null handle or bad argument */
  CANTOR_ERR_INTERNAL = 4      /* broken invariant; report it */
} cantor_status;

typedef struct cantor_point cantor_point;
typedef struct cantor_cylinder cantor_cylinder;
typedef struct cantor_index cantor_index;

/* Message for the most recent failure on this thread. */
const char* cantor_last_error(void);

void cantor_string_free(char* s);

/* ---- points: finitely described elements of {0,1}^A ---- */

cantor_status cantor_point_parse(const char* text, cantor_point** out);
char* cantor_point_print(const cantor_point* p);
void cantor_point_free(cantor_point* p);

/* Bit of p at (fiber, pos); pos is 1-based. */
int cantor_point_eval(const cantor_point* p, const char* fiber, uint64_t pos);
cantor_status cantor_point_shift(const cantor_point* p, uint64_t m,
                                 cantor_point** out);
/* *has_period = 0 when the point is not periodic. */
cantor_status cantor_point_period(const cantor_point* p, int* has_period,
                                  uint64_t* period);
int cantor_point_equal(const cantor_point* a, const cantor_point* b);

/* ---- cylinders: finite coordinate constraints ---- */

cantor_status cantor_cylinder_parse(const char* text, cantor_cylinder** out);
char* cantor_cylinder_print(const cantor_cylinder* c);
void cantor_cylinder_free(cantor_cylinder* c);

int cantor_cylinder_is_void(const cantor_cylinder* c);
cantor_status cantor_cylinder_intersect(const cantor_cylinder* a,
                                        const cantor_cylinder* b,
                                        cantor_cylinder** out);
cantor_status cantor_cylinder_preimage(const cantor_cylinder* c, uint64_t m,
                                       cantor_cylinder** out);
cantor_status cantor_cylinder_image(const cantor_cylinder* c, uint64_t m,
                                    cantor_cylinder** out);
int cantor_cylinder_member(const cantor_point* p, const cantor_cylinder* c);
int cantor_cylinder_subset(const cantor_cylinder* inner,
                           const cantor_cylinder* outer);

/* ---- uniformity indices (S, k) ---- */

cantor_status cantor_index_parse(const char* text, cantor_index** out);
char* cantor_index_print(const cantor_index* ix);
void cantor_index_free(cantor_index* ix);

cantor_status cantor_index_join(const cantor_index* a, const cantor_index* b,
                                cantor_index** out);
int cantor_index_refines(const cantor_index* a, const cantor_index* b);
cantor_status cantor_ball(const cantor_index* ix, const cantor_point* p,
                          cantor_cylinder** out);
int cantor_relates(const cantor_index* ix, const cantor_point* a,
                   const cantor_point* b);
/* Index of the least coordinate where two distinct points differ. */
cantor_status cantor_separating_index(const cantor_point* a,
                                      const cantor_point* b,
                                      cantor_index** out);

/* ---- witnesses (JSON out; *verified is the independent re-check) ---- */

cantor_status cantor_witness_transitivity(const cantor_cylinder* u,
                                          const cantor_cylinder* v,
                                          const char* designated_fiber,
                                          char** witness_json, int* verified);
cantor_status cantor_witness_periodic(const cantor_cylinder* u,
                                      const char* designated_fiber,
                                      char** witness_json, int* verified);
cantor_status cantor_witness_shared_orbit(const cantor_cylinder* u,
                                          const cantor_cylinder* v,
                                          const char* designated_fiber,
                                          char** witness_json, int* verified);
cantor_status cantor_witness_sensitivity(const cantor_point* x,
                                         const cantor_cylinder* nbhd,
                                         const char* designated_fiber,
                                         char** witness_json, int* verified);

/* ---- command runner ----
 *
 * Executes one CLI subcommand (argv without the program name).  Returns
 * the process exit code: 0 verified/clean, 1 verification failure or
 * discrepancy, 2 usage or parse error.  *stdout_text receives the JSON
 * document (or help text), *stderr_text the diagnostics; either may be
 * set to NULL when empty.
 */
int cantor_run(int argc, const char* const* argv, char** stdout_text,
               char** stderr_text);

#ifdef __cplusplus
}
#endif

#endif /* CANTOR_H */
