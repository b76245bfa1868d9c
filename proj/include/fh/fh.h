/* fh: exact transport cohomology for finite categorical filtrations.
 *
 * Every call that can fail returns an fh_status. On FH_ERR_* the message is
 * available from fh_last_error() until the next call on the same thread.
 * Reports are JSON envelopes; all numbers in them are integers or reduced
 * "p/q" strings. */
#ifndef FH_FH_H
#define FH_FH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FH_API __declspec(dllexport)
#elif defined(__GNUC__)
#define FH_API __attribute__((visibility("default")))
#else
#define FH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fh_filtration fh_filtration;
typedef struct fh_report fh_report;

typedef enum fh_status {
  FH_OK = 0,
  FH_NEGATIVE = 1,     /* report produced, result is negative (invalid filtration, not a loop, ...) */
  FH_ERR_PARSE = 2,    /* malformed spec file */
  FH_ERR_USAGE = 3,    /* bad argument */
  FH_ERR_INTERNAL = 4
} fh_status;

/* Pass as max_path_len to use the default bound. */
#define FH_DEFAULT_BOUND (-1)

FH_API const char* fh_version(void);
FH_API const char* fh_last_error(void);

FH_API fh_status fh_filtration_load_file(const char* path, fh_filtration** out);
FH_API fh_status fh_filtration_load_json(const char* text, size_t len, fh_filtration** out);
FH_API void fh_filtration_free(fh_filtration* f);

/* Canonical serialization of the loaded spec. Free with fh_string_free. */
FH_API fh_status fh_filtration_canonical_json(const fh_filtration* f, char** out);
FH_API void fh_string_free(char* s);

FH_API fh_status fh_validate(const fh_filtration* f, fh_report** out);
FH_API fh_status fh_martingale(const fh_filtration* f, int64_t max_path_len, int basis, fh_report** out);
FH_API fh_status fh_complex(const fh_filtration* f, const char* simplex, int64_t max_degree, int basis,
                            fh_report** out);
FH_API fh_status fh_holonomy(const fh_filtration* f, const char* simplex, fh_report** out);
FH_API fh_status fh_scan(const fh_filtration* f, int64_t max_len, int64_t limit, fh_report** out);
FH_API fh_status fh_naive_check(const fh_filtration* f, int64_t degree, int64_t max_path_len, fh_report** out);

/* Envelope text, owned by the report. */
FH_API const char* fh_report_json(const fh_report* r);
FH_API void fh_report_free(fh_report* r);

#ifdef __cplusplus
}
#endif

#endif
