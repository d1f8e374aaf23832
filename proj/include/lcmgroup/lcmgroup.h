#ifndef LCMGROUP_H
#define LCMGROUP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define LCMG_API __declspec(dllexport)
#else
#define LCMG_API __attribute__((visibility("default")))
#endif

/* Opaque handle to a fully enumerated finite group. */
typedef struct lcmg_group lcmg_group;

typedef enum lcmg_status {
  LCMG_OK = 0,
  LCMG_ERR_ARGUMENT = 1, /* invalid argument or group-axiom violation */
  LCMG_ERR_PARSE = 2,    /* spec / Cayley / catalog syntax; see lcmg_last_error_position */
  LCMG_ERR_CAPACITY = 3, /* a size, lattice, automorphism or action cap was exceeded */
  LCMG_ERR_IO = 4,
  LCMG_ERR_INTERNAL = 5
} lcmg_status;

/* Message of the last failing call on this thread ("" when none). */
LCMG_API const char* lcmg_last_error(void);
/* 1-based position of the last parse error on this thread; 0 when not a parse error. */
LCMG_API void lcmg_last_error_position(size_t* line, size_t* column);

/* Strings returned through char** out-parameters are owned by the caller. */
LCMG_API void lcmg_string_free(char* s);

/* Overrides the process-wide group size cap (default 2000 or LCMGROUP_SIZE_CAP). */
LCMG_API lcmg_status lcmg_set_size_cap(size_t cap);
LCMG_API size_t lcmg_size_cap(void);

LCMG_API lcmg_status lcmg_group_from_spec(const char* spec, lcmg_group** out);
LCMG_API void lcmg_group_free(lcmg_group* g);

LCMG_API lcmg_status lcmg_group_order(const lcmg_group* g, size_t* out);
LCMG_API lcmg_status lcmg_group_name(const lcmg_group* g, char** out);
/* {name, order, exponent, h, psi, abelian, nilpotent, nilpotency_class, solvable} */
LCMG_API lcmg_status lcmg_group_summary_json(const lcmg_group* g, char** out);
/* {members, lc, closed, witnesses: [{x, n, z}]} */
LCMG_API lcmg_status lcmg_lcm_json(const lcmg_group* g, char** out);
/* {verdict, class, steps: [...], delta: {...}} */
LCMG_API lcmg_status lcmg_series_json(const lcmg_group* g, char** out);

LCMG_API lcmg_status lcmg_deg(const lcmg_group* g, uint64_t* out);
/* {order, degrees, total, adjacency_bitrows} */
LCMG_API lcmg_status lcmg_graph_json(const lcmg_group* g, char** out);
LCMG_API lcmg_status lcmg_export_dot(const lcmg_group* g, const char* path, int include_loops);
LCMG_API lcmg_status lcmg_export_json(const lcmg_group* g, const char* path);

/* Runs the theorem suite. catalog_path NULL = built-in catalog; checks NULL or
 * "" = every check, otherwise a comma-separated id list. report_json and csv
 * may be NULL. exit_code receives 0 (all pass), 2 (a check failed) or 3
 * (capacity skips only). */
LCMG_API lcmg_status lcmg_verify(const char* catalog_path, const char* checks, int include_timing,
                                 char** report_json, char** csv, int* exit_code);
/* Newline-separated list of check ids. */
LCMG_API lcmg_status lcmg_check_ids(char** out);

/* Deg search over a template with "*" action indices. */
LCMG_API lcmg_status lcmg_search_deg(size_t order, const char* template_spec, uint64_t target, int require_solvable,
                                     char** out_json);

/* Bijection f: A -> B with o(x) | o(f(x)), or a Hall violator. */
LCMG_API lcmg_status lcmg_matching_json(const lcmg_group* a, const lcmg_group* b, char** out);

#ifdef __cplusplus
}
#endif

#endif /* LCMGROUP_H */
