#ifndef CONSTJ_CONSTJ_H
#define CONSTJ_CONSTJ_H

/* C interface to the constant-j elliptic surface toolkit.
 * Every function returns a cj_status; on failure cj_last_error() describes it.
 * Strings handed out by the library are released with cj_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CJ_API __declspec(dllexport)
#else
#define CJ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cj_status {
  CJ_OK = 0,
  CJ_ERR_VALIDATION = 1,
  CJ_ERR_MISSING_COUNTS = 2,
  CJ_ERR_INCONSISTENT = 3, /* count data, branch correction or invariant failure */
  CJ_ERR_OVERFLOW = 4,
  CJ_ERR_DIVISION_BY_ZERO = 5,
  CJ_ERR_INTERNAL = 6
} cj_status;

typedef enum cj_jcase { CJ_J0 = 0, CJ_J1728 = 1728 } cj_jcase;

typedef enum cj_command { CJ_CMD_CATALOG = 0, CJ_CMD_VERIFY, CJ_CMD_ZETA, CJ_CMD_REPORT } cj_command;

typedef enum cj_format { CJ_FORMAT_TEXT = 0, CJ_FORMAT_JSON, CJ_FORMAT_CSV } cj_format;

typedef struct cj_field cj_field;
typedef struct cj_form cj_form;
typedef struct cj_report cj_report;

CJ_API const char* cj_version(void);
/* Message for the last failing call on this thread; "" if none. */
CJ_API const char* cj_last_error(void);
CJ_API void cj_string_free(char* s);

/* ---- finite fields ---- */
CJ_API cj_status cj_field_create(uint64_t p, int degree, cj_field** out);
CJ_API void cj_field_destroy(cj_field* field);
/* q as a decimal string. */
CJ_API cj_status cj_field_order(const cj_field* field, char** out);
/* #{y : y^n = c} for c given by its base-p index. */
CJ_API cj_status cj_nth_power_count(const cj_field* field, uint64_t c_index, int n, uint64_t* out);

/* ---- binary forms ---- */
/* pattern: "5,5,5,3". roots: "0,1,inf,2" or NULL/"" for the defaults.
 * p = 0 builds an abstract form with symbolic places. */
CJ_API cj_status cj_form_create(cj_jcase jcase, const char* pattern, const char* roots, uint64_t p, cj_form** out);
CJ_API void cj_form_destroy(cj_form* form);
CJ_API int cj_form_n(const cj_form* form);
CJ_API int cj_form_k(const cj_form* form);
CJ_API cj_status cj_form_complement(const cj_form* form, cj_form** out);
CJ_API cj_status cj_form_key(const cj_form* form, char** out);
CJ_API cj_status cj_form_display(const cj_form* form, char** out);

/* ---- curves u^a = f ---- */
CJ_API cj_status cj_genus(const cj_form* form, int a, int* out);
CJ_API cj_status cj_components(const cj_form* form, int a, int* out);
/* Writes N entries (N = 6 or 4) into dims. */
CJ_API cj_status cj_eigenspace_dims(const cj_form* form, int* dims, size_t len);
/* Point count of the smooth model over the field, as a decimal string. */
CJ_API cj_status cj_count_points(const cj_form* form, int a, const cj_field* field, int jobs, char** out);

/* ---- commands ---- */
CJ_API cj_status cj_catalog_render(cj_jcase jcase, cj_format format, char** out);

typedef struct cj_run_config {
  cj_command command;
  cj_jcase jcase;
  uint64_t p;            /* 0 = none */
  const char* pattern;
  const char* roots;     /* NULL or "" for defaults */
  int i_max;             /* < 0 = automatic */
  const char* cache_dir; /* NULL or "" disables the cache */
  int jobs;
  int timing;
} cj_run_config;

CJ_API void cj_run_config_init(cj_run_config* cfg);
CJ_API cj_status cj_run(const cj_run_config* cfg, cj_report** out);
CJ_API void cj_report_destroy(cj_report* report);
CJ_API cj_status cj_report_render(const cj_report* report, cj_format format, char** out);
/* 0 ok, 2 when the verdict applies and failed. */
CJ_API int cj_report_exit_code(const cj_report* report);
CJ_API size_t cj_report_warning_count(const cj_report* report);
CJ_API const char* cj_report_warning(const cj_report* report, size_t i);
CJ_API cj_status cj_report_stats(const cj_report* report, int* sweeps, int* cache_hits);

#ifdef __cplusplus
}
#endif

#endif
