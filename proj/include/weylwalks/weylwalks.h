#ifndef WEYLWALKS_H
#define WEYLWALKS_H

#include <stddef.h>

#if defined(WEYLWALKS_BUILDING)
#define WW_API __attribute__((visibility("default")))
#else
#define WW_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ww_status {
  WW_OK = 0,
  WW_ERR_ARG = 1,
  WW_ERR_PARSE = 2,
  WW_ERR_RESOURCE = 3,
  WW_ERR_PIPELINE = 4
} ww_status;

typedef struct ww_model ww_model;
typedef struct ww_estimate ww_estimate;

/* Message of the last failed call on this thread; never NULL. */
WW_API const char* ww_last_error(void);

/* Working precision in bits for later calls on this thread; 0 restores the default,
   which is WEYLWALKS_PRECISION when set and 106 otherwise. */
WW_API ww_status ww_set_precision(unsigned bits);

/* name: "tandem" or "double-tandem"; a, b: exact fractions such as "1/8". */
WW_API ww_status ww_model_new(const char* name, const char* a, const char* b, ww_model** out);
WW_API void ww_model_free(ww_model* model);
WW_API ww_status ww_model_regime(const ww_model* model, char** out);

/* Strings returned through char** are owned by the caller and freed with ww_string_free. */
WW_API void ww_string_free(char* s);

/* Exact weighted count q(n) as "p/q" (or an integer). max_n = 0 keeps the default cap. */
WW_API ww_status ww_count_q(const ww_model* model, size_t n, size_t max_n, char** out);
/* Unweighted endpoint counts after n steps as CSV "i,j,count". */
WW_API ww_status ww_count_endpoints(const ww_model* model, size_t n, size_t max_n, char** csv);

WW_API ww_status ww_asymptotics(const ww_model* model, ww_estimate** out);
WW_API void ww_estimate_free(ww_estimate* est);
WW_API double ww_estimate_rho(const ww_estimate* est);
WW_API double ww_estimate_r(const ww_estimate* est);
WW_API double ww_estimate_gamma(const ww_estimate* est);
WW_API int ww_estimate_conjectured(const ww_estimate* est);
WW_API ww_status ww_estimate_rho_exact(const ww_estimate* est, char** out);
WW_API ww_status ww_estimate_regime(const ww_estimate* est, char** out);
/* Keys: model, a, b, regime, rho_exact, rho_float, r, gamma_float, conjectured. */
WW_API ww_status ww_estimate_json(const ww_estimate* est, char** out);
WW_API ww_status ww_estimate_text(const ww_estimate* est, char** out);
/* Relative prediction gamma rho^n n^-r (with periodic terms) as a decimal string. */
WW_API ww_status ww_estimate_predict(const ww_estimate* est, size_t n, char** out);

/* Validation report as JSON; *passed is 1 when errors decrease and the last is below bound. */
WW_API ww_status ww_validate(const ww_model* model, const size_t* lengths, size_t count, double bound, size_t max_n,
                             char** json, int* passed);

/* Regime-diagram CSV over a W x H grid on (lo, hi]^2; lo and hi are exact fractions. */
WW_API ww_status ww_sweep(const char* model, size_t w, size_t h, const char* lo, const char* hi, char** csv);

#ifdef __cplusplus
}
#endif

#endif
