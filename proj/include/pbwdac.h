#ifndef PBWDAC_H
#define PBWDAC_H

/*
 * pbwdac - coherent binary-weighted photonic DAC simulator, C interface.
 *
 * The library is driven through an opaque configuration handle. Keys use the
 * same flat dotted schema as the config file (see README). Every function
 * returns PBW_OK or an error code; pbw_last_error() holds a thread-local
 * message for the most recent failure on the calling thread.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(PBWDAC_BUILD)
#define PBWDAC_API __declspec(dllexport)
#else
#define PBWDAC_API __declspec(dllimport)
#endif
#elif defined(__GNUC__) && __GNUC__ >= 4
#define PBWDAC_API __attribute__((visibility("default")))
#else
#define PBWDAC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define PBW_OK 0
#define PBW_E_ARG 1      /* null pointer, bad buffer, bad subcommand name */
#define PBW_E_PARSE 2    /* config file does not parse */
#define PBW_E_VALIDATE 3 /* a key value violates its constraints */
#define PBW_E_GUARD 4    /* numerical guard tripped (e.g. 2^N enumeration cap) */
#define PBW_E_IO 5       /* file could not be read or written */

typedef struct pbw_config pbw_config;

PBWDAC_API const char* pbw_version(void);
PBWDAC_API const char* pbw_last_error(void);

/* Configuration lifecycle. A freshly created config carries the default
 * parameter set (4-bit circuit, r=0.75 couplers, 4.6 dB extinction,
 * 50 Gbit/s NRZ, 1 ps + 1 ps jitter, 1550 nm carrier). */
PBWDAC_API int pbw_config_default(pbw_config** out);
PBWDAC_API int pbw_config_load(const char* path, pbw_config** out);
PBWDAC_API int pbw_config_set(pbw_config* cfg, const char* key, const char* value);
/* Writes the current value of `key` into buf (NUL terminated). Fails with
 * PBW_E_ARG if the buffer is too small. */
PBWDAC_API int pbw_config_get(const pbw_config* cfg, const char* key, char* buf, size_t len);
PBWDAC_API void pbw_config_free(pbw_config* cfg);

/* Static circuit evaluation. Codes run 0 .. 2^n_bits - 1. */
PBWDAC_API int pbw_code_count(const pbw_config* cfg, uint64_t* out);
PBWDAC_API int pbw_evaluate_code(const pbw_config* cfg, uint64_t code, double* power_w,
                                 double* field_re, double* field_im);
/* Fills powers_w[0 .. len-1] with the full transfer curve; len must equal
 * the code count. */
PBWDAC_API int pbw_transfer_curve(const pbw_config* cfg, double* powers_w, size_t len);

/* Reports, serialized as JSON into the caller's buffer. *needed receives the
 * required size including the terminating NUL; pass len = 0 to query. */
PBWDAC_API int pbw_static_report(const pbw_config* cfg, char* buf, size_t len, size_t* needed);
PBWDAC_API int pbw_dynamic_report(const pbw_config* cfg, char* buf, size_t len, size_t* needed);
PBWDAC_API int pbw_power_budget(const pbw_config* cfg, char* buf, size_t len, size_t* needed);

/* Maximum resolvable bit count under the configured resolution criterion. */
PBWDAC_API int pbw_resolution_limit(const pbw_config* cfg, int* max_bits);

/* Runs one subcommand (transfer, eye, metrics, budget, resolution, sweep)
 * end to end, writing its artifact files into output.directory. `label`
 * overrides output.label when non-NULL; artifacts are named
 * <subcommand>_<label>.{csv,json}. */
PBWDAC_API int pbw_run(const pbw_config* cfg, const char* subcommand, const char* label);

#ifdef __cplusplus
}
#endif

#endif /* PBWDAC_H */
