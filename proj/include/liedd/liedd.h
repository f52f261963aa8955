/* C interface to the liedd library. Strings returned through `char** out`
 * are owned by the caller and released with liedd_string_free. */
#ifndef LIEDD_H
#define LIEDD_H

#include <stddef.h>

#if defined(_WIN32)
#define LIEDD_API __declspec(dllexport)
#else
#define LIEDD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct liedd_context liedd_context;
typedef struct liedd_algebra liedd_algebra;

typedef enum liedd_status {
  LIEDD_OK = 0,
  LIEDD_USAGE = 1,        /* bad arguments or incompatible options */
  LIEDD_PARSE = 2,        /* malformed literal, element, matrix or file */
  LIEDD_VALIDATION = 3,   /* Jacobi violation, duplicate name, vanishing denominator, ... */
  LIEDD_UNKNOWN_NAME = 4,
  LIEDD_INTERNAL = 5
} liedd_status;

typedef enum liedd_format { LIEDD_FORMAT_TEXT = 0, LIEDD_FORMAT_JSON = 1, LIEDD_FORMAT_CSV = 2 } liedd_format;

LIEDD_API const char* liedd_version(void);

/* A context owns the catalog (built-ins plus merged files) and the last error. */
LIEDD_API liedd_status liedd_context_create(liedd_context** out);
LIEDD_API void liedd_context_destroy(liedd_context* ctx);
/* Message of the last failed call on this context, "" if none. */
LIEDD_API const char* liedd_last_error(const liedd_context* ctx);
/* Merges a structure-constant file into the catalog. */
LIEDD_API liedd_status liedd_load_catalog(liedd_context* ctx, const char* path);

/* assignments: "name=value" strings, e.g. "alpha=1/2" or "n=5". */
LIEDD_API liedd_status liedd_algebra_get(liedd_context* ctx, const char* name, const char* const* assignments,
                                         size_t n_assignments, liedd_algebra** out);
LIEDD_API void liedd_algebra_destroy(liedd_algebra* alg);
LIEDD_API size_t liedd_algebra_dim(const liedd_algebra* alg);

LIEDD_API liedd_status liedd_catalog_list(liedd_context* ctx, liedd_format fmt, char** out);
LIEDD_API liedd_status liedd_report_show(liedd_context* ctx, const liedd_algebra* alg, liedd_format fmt, char** out);
LIEDD_API liedd_status liedd_report_invariants(liedd_context* ctx, const liedd_algebra* alg, liedd_format fmt,
                                               char** out);
/* t == NULL: ordinary derivations; otherwise (t,1,1)-derivations. */
LIEDD_API liedd_status liedd_report_derivations(liedd_context* ctx, const liedd_algebra* alg, const char* t,
                                                liedd_format fmt, char** out);
/* id: "1", "2", "3", "4", "6" or "s5". quantifier: "fixed", "all-der",
 * "all-inner", "all-elem" or NULL for the default (fixed when z or map_json
 * is given). z: element expression; map_json: JSON array of matrix rows. */
LIEDD_API liedd_status liedd_report_identity(liedd_context* ctx, const liedd_algebra* alg, const char* id,
                                             const char* quantifier, const char* z, const char* map_json,
                                             liedd_format fmt, char** out);
/* Exactly one of z and matrix_json is non-NULL; with z the map is ad(z). */
LIEDD_API liedd_status liedd_report_rmatrix(liedd_context* ctx, const liedd_algebra* alg, const char* z,
                                            const char* matrix_json, int build_double, liedd_format fmt, char** out);
LIEDD_API liedd_status liedd_report_table1(liedd_context* ctx, liedd_format fmt, char** out);
/* Runs the acceptance criteria. table2_file may be NULL. *all_passed is
 * set to 1 when every criterion passed. */
LIEDD_API liedd_status liedd_report_check(liedd_context* ctx, const char* table2_file, liedd_format fmt, char** out,
                                          int* all_passed);

LIEDD_API void liedd_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
