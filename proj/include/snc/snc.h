#ifndef SNC_SNC_H
#define SNC_SNC_H

/* C interface of the snc library. Every function returns an snc_status;
 * on failure snc_last_error() holds a message for the calling thread.
 * Strings returned through char** are owned by the caller and released with
 * snc_string_free. Handles are released with their *_free function; passing
 * NULL to a *_free function is a no-op. */

#include <stddef.h>

#if defined(_WIN32)
#define SNC_API __declspec(dllexport)
#else
#define SNC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum snc_status {
  SNC_OK = 0,
  SNC_ERR_INVALID_INPUT = 1,
  SNC_ERR_PARSE = 2,
  SNC_ERR_DEPENDENT_INPUT = 3,
  SNC_ERR_UNSATURATED_WINDOW = 4,
  SNC_ERR_NON_FREE_ACTION = 5,
  SNC_ERR_SNC_CONDITION_VIOLATED = 6,
  SNC_ERR_NOT_A_COMPLEX = 7,
  SNC_ERR_NOT_EQUIDIMENSIONAL = 8,
  SNC_ERR_DIMENSION_MISMATCH = 9,
  SNC_ERR_MISSING_INPUT = 10,
  SNC_ERR_INVALID_PARAMS = 11,
  SNC_ERR_NULL_ARGUMENT = 100,
  SNC_ERR_INTERNAL = 101
} snc_status;

typedef enum snc_format { SNC_FORMAT_JSON = 0, SNC_FORMAT_ASCII = 1, SNC_FORMAT_SVG = 2 } snc_format;

typedef struct snc_fan snc_fan;
typedef struct snc_strata snc_strata;

SNC_API const char* snc_version(void);
SNC_API const char* snc_status_name(snc_status status);
SNC_API const char* snc_last_error(void);
SNC_API void snc_string_free(char* s);

/* Fan systems */
SNC_API snc_status snc_fan_from_json(const char* json, snc_fan** out);
/* Rank-2 window with rays M^k (1,0), k = 0..length; m is row-major 2x2. */
SNC_API snc_status snc_fan_hilbert(const long long m[4], size_t length, size_t power, snc_fan** out);
SNC_API void snc_fan_free(snc_fan* fan);
SNC_API snc_status snc_fan_to_json(const snc_fan* fan, char** out);
SNC_API snc_status snc_fan_cone_count(const snc_fan* fan, size_t* out);
SNC_API snc_status snc_fan_cusp_count(const snc_fan* fan, size_t* out);
/* Borrowed; valid until the handle is freed. */
SNC_API const char* snc_fan_cusp_name(const snc_fan* fan, size_t index);
/* *ok is 1 when no cone has two equivalent rays; report is
 * {"ok", "violations":[{cone, cusp, rays, pair}]}. */
SNC_API snc_status snc_fan_check_snc(const snc_fan* fan, int* ok, char** report);
/* 1 when every cone is smooth. */
SNC_API snc_status snc_fan_all_smooth(const snc_fan* fan, int* out);
SNC_API snc_status snc_fan_two_division(const snc_fan* fan, snc_fan** out);
SNC_API snc_status snc_fan_smooth(const snc_fan* fan, snc_fan** out);
/* Two-division followed by smoothing. */
SNC_API snc_status snc_fan_subdivide(const snc_fan* fan, snc_fan** out);
/* {"cusp", "complex":{...}, "homology":{betti, closed, oriented, fundamental_class}}
 * for the quotient complex of the named cusp. */
SNC_API snc_status snc_fan_homology(const snc_fan* fan, const char* cusp, char** out);

/* Strata complexes */
SNC_API snc_status snc_strata_from_json(const char* json, snc_strata** out);
/* annotation: {"n"?: int, "cusps":[{"cusp": name, "d": count}]} */
SNC_API snc_status snc_strata_from_fan(const snc_fan* fan, const char* annotation_json, snc_strata** out);
SNC_API void snc_strata_free(snc_strata* strata);
SNC_API snc_status snc_strata_to_json(const snc_strata* strata, char** out);
/* {"e1": page of degrees k-1..k+1 with d1, "e2": weight-graded H^k} */
SNC_API snc_status snc_strata_spectral(const snc_strata* strata, int k, char** out);
SNC_API snc_status snc_strata_fn_filtration(const snc_strata* strata, char** out);

/* Stairs regions and corank reports; preset is "sp:G", "o2n:N" or "u:P,Q". */
SNC_API snc_status snc_stairs(const char* preset, int k, snc_format format, char** out);
SNC_API snc_status snc_stairs_count(const char* preset, int k, size_t* out);
/* *consistent is 1 when every identity holds. */
SNC_API snc_status snc_report(const char* preset, const char* inventory_json, int* consistent, char** out);

/* Built-in fixtures: "hilbert", "hilbert-m3", "cstar", "p1xp1". length is
 * the Hilbert window length (0 selects 3) and is ignored by the others. */
SNC_API size_t snc_fixture_count(void);
SNC_API const char* snc_fixture_name(size_t index);
SNC_API snc_status snc_fixture_json(const char* name, size_t length, char** out);

#ifdef __cplusplus
}
#endif

#endif
