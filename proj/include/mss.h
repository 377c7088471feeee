/* mss.h - C interface to the multi-secret sharing library.
 *
 * Every function returns MSS_OK (0) on success or one of the MSS_ERR_*
 * codes below; mss_last_error() gives a thread-local detail message for
 * the most recent failure on the calling thread. Stateful objects are
 * opaque handles with explicit _new/_free pairs.
 */
#ifndef MSS_H
#define MSS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MSS_API
#elif defined(MSS_BUILDING_SHARED)
#define MSS_API __attribute__((visibility("default")))
#else
#define MSS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Error codes. Values are stable; the CLI reuses them as exit codes. */
enum {
    MSS_OK = 0,
    MSS_ERR_FAIL = 1,
    MSS_ERR_INVALID_PARAMS = 2,
    MSS_ERR_NOT_PRIME = 3,
    MSS_ERR_MODULUS_MISMATCH = 4,
    MSS_ERR_ZERO_INVERSE = 5,
    MSS_ERR_DUPLICATE_X = 6,
    MSS_ERR_EMPTY_INPUT = 7,
    MSS_ERR_K_TOO_LARGE_FOR_FIELD = 8,
    MSS_ERR_DEGENERATE_SECRET_SET = 9,
    MSS_ERR_LEADING_SECRET_ZERO = 10,
    MSS_ERR_ALL_ZERO_SECRETS = 11,
    MSS_ERR_MIXED_SHARES = 12,
    MSS_ERR_QUORUM_TOO_SMALL = 13,
    MSS_ERR_CHUNK_EXCEEDS_MODULUS = 14,
    MSS_ERR_TOO_LARGE = 15,
    MSS_ERR_WRAPAROUND_RISK = 16,
    MSS_ERR_PARSE = 17,
    MSS_ERR_BUFFER_TOO_SMALL = 18,
    MSS_ERR_IO = 19,        /* reserved for the CLI */
    MSS_EXIT_USAGE = 64     /* reserved for the CLI */
};

enum {
    MSS_SCHEME_SHAMIR = 0,
    MSS_SCHEME_POINTS = 1,
    MSS_SCHEME_COEFF = 2
};

enum {
    MSS_CENSUS_INTERPOLATE = 0,
    MSS_CENSUS_VANDERMONDE = 1
};

/* Short stable token for an error code, e.g. "degenerate-secret-set". */
MSS_API const char* mss_error_name(int code);

/* Detail message for the last failure on this thread; empty string if none.
 * The pointer stays valid until the next library call on the same thread. */
MSS_API const char* mss_last_error(void);

/* ---- deterministic random source (opaque) ---- */

typedef struct mss_rng mss_rng;

MSS_API mss_rng* mss_rng_new(uint64_t seed);
MSS_API void mss_rng_free(mss_rng* rng);

/* ---- shares and schemes ---- */

typedef struct {
    int32_t scheme;     /* MSS_SCHEME_* */
    uint64_t p;
    uint32_t threshold;
    uint64_t x;
    uint64_t y;
} mss_share;

/* Splits one secret k-of-n; writes n shares to shares_out. */
MSS_API int mss_shamir_split(uint64_t p, uint64_t secret, uint32_t threshold,
                             uint32_t n, mss_rng* rng, mss_share* shares_out);

MSS_API int mss_shamir_reconstruct(const mss_share* shares, uint32_t count,
                                   uint64_t* secret_out);

/* Splits k secrets with threshold k; writes n shares. Fails with
 * MSS_ERR_DEGENERATE_SECRET_SET when the tuple interpolates below
 * degree k-1. */
MSS_API int mss_points_split(uint64_t p, const uint64_t* secrets, uint32_t k,
                             uint32_t n, mss_share* shares_out);

/* Writes threshold-many secrets to secrets_out. */
MSS_API int mss_points_reconstruct(const mss_share* shares, uint32_t count,
                                   uint64_t* secrets_out);

/* Splits k secrets with threshold m (k <= m <= n); rng may be NULL when
 * m == k. Writes n shares. */
MSS_API int mss_coeff_split(uint64_t p, const uint64_t* secrets, uint32_t k,
                            uint32_t m, uint32_t n, mss_rng* rng,
                            mss_share* shares_out);

/* Writes k_secrets secrets to secrets_out. */
MSS_API int mss_coeff_reconstruct(const mss_share* shares, uint32_t count,
                                  uint32_t k_secrets, uint64_t* secrets_out);

/* Splits `len` bytes into k chunks of ceil(8*len/k) bits each (big-endian,
 * final chunk zero-padded); writes k values to secrets_out. */
MSS_API int mss_chunk_secret(const uint8_t* bytes, size_t len, uint32_t k,
                             uint64_t p, uint64_t* secrets_out);

/* Restores exactly byte_len bytes from k chunk values. */
MSS_API int mss_unchunk_secret(const uint64_t* secrets, uint32_t k,
                               size_t byte_len, uint8_t* bytes_out);

/* ---- analysis ---- */

typedef struct {
    uint64_t num;
    uint64_t den;
} mss_rational;

typedef struct {
    uint64_t p;
    uint32_t k;
    uint64_t total_tuples;
    uint64_t degenerate_count;
    uint64_t closed_form;           /* p^(k-1) */
    mss_rational failure_percent;   /* exact, reduced */
} mss_census_report;

MSS_API int mss_degeneracy_census(uint64_t p, uint32_t k, int method,
                                  mss_census_report* report_out);

/* Sets *holds_out to 1 iff the report's failure rate is exactly 100/p. */
MSS_API int mss_eq1_check(const mss_census_report* report, int* holds_out);

typedef struct {
    int32_t scheme;
    uint32_t n;
    uint32_t threshold;
    uint32_t k_secrets;
    uint64_t secret_size_units;
    mss_rational blowup;
} mss_blowup_report;

MSS_API int mss_blowup_factor(int scheme, uint32_t n, uint32_t threshold,
                              uint32_t k_secrets, uint64_t d,
                              mss_blowup_report* report_out);

/* ---- attacks ---- */

typedef struct {
    uint64_t u;
    uint64_t q_u;
    uint64_t r;
    int divisible;
    uint64_t search_space_size;
} mss_divisibility_report;

MSS_API int mss_divisibility_attack(const mss_share* share, uint64_t r,
                                    mss_divisibility_report* report_out);

MSS_API int mss_related_share_forgery(const mss_share* source, uint64_t d,
                                      mss_share* forged_out);

/* ---- share file text format (opaque) ----
 *
 *   mss1 <scheme> <p> <threshold> <k_secrets>\n
 *   <index> <x> <y>\n
 *
 * Canonical form only: single spaces, lowercase tags, no leading zeros,
 * newline-terminated lines. Parse then serialize is byte-identical.
 */

typedef struct mss_sharefile mss_sharefile;

MSS_API int mss_sharefile_create(int scheme, uint64_t p, uint32_t threshold,
                                 uint32_t k_secrets, mss_sharefile** file_out);
MSS_API int mss_sharefile_parse(const char* text, mss_sharefile** file_out);
MSS_API void mss_sharefile_free(mss_sharefile* file);

MSS_API int mss_sharefile_add(mss_sharefile* file, uint64_t index,
                              const mss_share* share);

/* Writes the canonical text (NUL-terminated) into buf. *len_out receives the
 * text length excluding the NUL; fails with MSS_ERR_BUFFER_TOO_SMALL if
 * cap < *len_out + 1 (call with buf=NULL, cap=0 to size). */
MSS_API int mss_sharefile_serialize(const mss_sharefile* file, char* buf,
                                    size_t cap, size_t* len_out);

MSS_API int mss_sharefile_scheme(const mss_sharefile* file);
MSS_API uint64_t mss_sharefile_p(const mss_sharefile* file);
MSS_API uint32_t mss_sharefile_threshold(const mss_sharefile* file);
MSS_API uint32_t mss_sharefile_k_secrets(const mss_sharefile* file);
MSS_API uint32_t mss_sharefile_count(const mss_sharefile* file);

/* Fetches entry i as a validated share plus its index field. */
MSS_API int mss_sharefile_entry(const mss_sharefile* file, uint32_t i,
                                uint64_t* index_out, mss_share* share_out);

#ifdef __cplusplus
}
#endif

#endif /* MSS_H */
