/*
 * vandiver.h - C interface to the Vandiver criteria library.
 *
 * Conventions
 *   Every function returns a vdv_status. On failure, vdv_last_error() gives
 *   a message for the calling thread until its next call into the library.
 *
 *   Array outputs use a size query: pass out = NULL (or a too-small cap) and
 *   the required length is stored in *len. With a NULL buffer the call
 *   returns VDV_OK; with a short buffer it returns VDV_BUFFER_TOO_SMALL.
 *
 *   Strings returned through char** are heap-allocated by the library and
 *   must be released with vdv_string_free().
 *
 *   Ring elements of Z[zeta_p] (or F_p[zeta_p]) are coefficient arrays of
 *   length p-1 on the basis 1, x, ..., x^{p-2}.
 */
#ifndef VANDIVER_H
#define VANDIVER_H

#include <stddef.h>
#include <stdint.h>

#if defined(VDV_BUILDING_LIBRARY)
#define VDV_API __attribute__((visibility("default")))
#else
#define VDV_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vdv_status {
    VDV_OK = 0,
    VDV_INVALID_ARGUMENT = 1,
    VDV_RESOURCE_LIMIT = 2,
    VDV_INTERNAL_ERROR = 3,
    VDV_IO_ERROR = 4,
    VDV_BUFFER_TOO_SMALL = 5
} vdv_status;

VDV_API const char* vdv_version(void);
VDV_API const char* vdv_status_name(vdv_status status);
VDV_API const char* vdv_last_error(void);
VDV_API void vdv_string_free(char* s);

/* ---- modular arithmetic ---------------------------------------------- */

VDV_API vdv_status vdv_is_prime(uint64_t n, int* out);
VDV_API vdv_status vdv_primitive_root(uint64_t q, uint64_t* out);

/* The first `count` primes l = 1 mod 2p (or fewer if l_max is reached;
 * l_max = 0 means no bound). Size query applies with cap = count. */
VDV_API vdv_status vdv_split_primes(uint32_t p, uint64_t l_max, size_t count, uint64_t* out, size_t* len);

/* ---- twists and exponent sets ---------------------------------------- */

typedef struct vdv_twist vdv_twist;

/* c = 0 picks the smallest primitive root mod p, g = 0 the smallest mod l. */
VDV_API vdv_status vdv_twist_create(uint32_t p, uint64_t l, uint32_t c, uint64_t g, vdv_twist** out);
VDV_API void vdv_twist_destroy(vdv_twist* t);
VDV_API vdv_status vdv_twist_params(const vdv_twist* t, uint32_t* p, uint64_t* l, uint32_t* c, uint64_t* g);

/* J_i mod p, i in [1, c-1]. */
VDV_API vdv_status vdv_jacobi_sum(const vdv_twist* t, uint32_t i, uint32_t* out, size_t cap, size_t* len);
/* J = J_1 ... J_{c-1} mod p. */
VDV_API vdv_status vdv_twist_product(const vdv_twist* t, uint32_t* out, size_t cap, size_t* len);
/* Whether the n-component of J is 1 mod p (n even, 2 <= n <= p-3). */
VDV_API vdv_status vdv_component_is_one(const vdv_twist* t, uint32_t n, int* out);
/* E_l(p), ascending. by_products != 0 selects the literal product route. */
VDV_API vdv_status vdv_exponent_set(const vdv_twist* t, int by_products, uint32_t* out, size_t cap, size_t* len);

/* ---- Bernoulli side --------------------------------------------------- */

/* E_0(p): even n in [2, p-3] with B_n = 0 mod p, ascending. */
VDV_API vdv_status vdv_irregular_exponents(uint32_t p, uint32_t* out, size_t cap, size_t* len);
/* B_{1, omega^m} mod p for odd m. */
VDV_API vdv_status vdv_b1_omega(uint32_t p, uint32_t m, uint32_t* out);
/* (c - c^{p-n}) B_{1, omega^{n-1}} mod p. */
VDV_API vdv_status vdv_b_c_factor(uint32_t p, uint32_t c, uint32_t n, uint32_t* out);

/* ---- criteria and scans ---------------------------------------------- */

/* Receives each scan record as a JSON object, in stream order. */
typedef void (*vdv_record_callback)(const char* record_json, void* user);

typedef struct vdv_scan_options {
    unsigned jobs;               /* worker threads, >= 1 */
    uint32_t c;                  /* 0 = smallest primitive root mod p */
    const char* cache_path;      /* JSON-lines cache file, or NULL */
    vdv_record_callback on_record;
    void* user;
} vdv_scan_options;

VDV_API void vdv_scan_options_init(vdv_scan_options* opts);

/* One record {"p","l","c","g","expp","ms"}. */
VDV_API vdv_status vdv_scan_record(uint32_t p, uint64_t l, const vdv_scan_options* opts, char** json);

/* Single-prime test. *holds is 1 when the verdict is established. */
VDV_API vdv_status vdv_criterion_a(uint32_t p, uint64_t l, const vdv_scan_options* opts, int* holds, char** json);
/* Running intersection over the split primes (l_max = 0: unbounded). */
VDV_API vdv_status vdv_criterion_b(uint32_t p, uint32_t max_n, uint64_t l_max, const vdv_scan_options* opts,
                                   int* holds, char** json);
/* First split prime l <= l_max with E_l(p) empty; *found = 0 if none. */
VDV_API vdv_status vdv_minimal_empty_l(uint32_t p, uint64_t l_max, const vdv_scan_options* opts, int* found,
                                       uint64_t* l, uint32_t* index);
/* {"p","Nel","Npp","el","counts"} over the first `count` split primes. */
VDV_API vdv_status vdv_density_scan(uint32_t p, uint64_t count, const vdv_scan_options* opts, char** json);

/* ---- exact components and residue symbols ----------------------------- */

typedef enum vdv_symbol_class {
    VDV_NON_LOCAL_AT_L = 0,
    VDV_LOCAL_AT_L = 1,
    VDV_LOCAL_AT_P = 2,
    VDV_GLOBAL_PTH_POWER = 3
} vdv_symbol_class;

typedef struct vdv_symbol_report {
    uint32_t p;
    uint32_t n;
    uint64_t l;
    uint64_t g;
    uint64_t v;
    uint64_t s;
    uint64_t u;
    int local_at_p;
    int local_at_L;
    vdv_symbol_class classification;
} vdv_symbol_report;

/* memory_cap = 0 uses the default of 1 GiB. `json` (optional) receives
 * the report with a "lines" array holding the text rendering. */
VDV_API vdv_status vdv_classify(const vdv_twist* t, uint32_t n, size_t memory_cap, vdv_symbol_report* out,
                                char** json);
/* Exact full-range component S_n as a PARI polynomial string. */
VDV_API vdv_status vdv_exact_component(const vdv_twist* t, uint32_t n, size_t memory_cap, char** poly);
/* Decimal norm of the exact full-range component. */
VDV_API vdv_status vdv_exact_component_norm(const vdv_twist* t, uint32_t n, size_t memory_cap, char** decimal);

/* ---- spectra ---------------------------------------------------------- */

/* target = 0 uses p-4 (2 for p = 5, 1 for p = 3). l_max = 0 and
 * max_count = 0 mean unbounded. JSON: {"p","target","reached","elp",
 * "rank","history","text"}. */
VDV_API vdv_status vdv_rank_scan(uint32_t p, uint32_t target, uint64_t l_max, uint64_t max_count, unsigned jobs,
                                 uint32_t c, char** json);
VDV_API vdv_status vdv_conjugate_rank(uint32_t p, uint64_t l, uint32_t c, uint32_t* out);
VDV_API vdv_status vdv_derivation_check(const vdv_twist* t, int* out);

/* R_l mod p, p+1 coefficients low to high. dense != 0 selects the
 * reference route. f (optional) receives the residue degree. */
VDV_API vdv_status vdv_trace_polynomial(uint32_t p, uint64_t l, uint64_t g, int dense, uint32_t* out, size_t cap,
                                        size_t* len, uint32_t* f);
/* {"p","l","f","R","text"} */
VDV_API vdv_status vdv_trace_polynomial_json(uint32_t p, uint64_t l, char** json);

/* Distinct R_l over split primes l <= bound. on_trace sees every l.
 * JSON: {"p","bound","processed","count","first_seen"}. */
VDV_API vdv_status vdv_distinct_traces(uint32_t p, uint64_t bound, unsigned jobs, const char* catalog_path,
                                       vdv_record_callback on_trace, void* user, char** json);

VDV_API vdv_status vdv_heuristic_probability(uint32_t p, double* out);

#ifdef __cplusplus
}
#endif

#endif /* VANDIVER_H */
