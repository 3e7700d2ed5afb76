/*
 * powdiag C API.
 *
 * Every computation takes a context (worker count, memory cap, output
 * format) and, on success, hands back a document owning the rendered JSON
 * or CSV text. Functions return PDG_OK or an error status; the message for
 * the most recent failure is available from pdg_context_last_error().
 *
 * Integers that may exceed 64 bits (u, g, sequence elements) and torus
 * elements ("a/b") are passed as decimal strings.
 *
 * Contexts are not thread-safe; use one per thread. Documents are
 * independent of the context that produced them.
 */
#ifndef POWDIAG_H
#define POWDIAG_H

#include <stddef.h>
#include <stdint.h>

#if defined(POWDIAG_BUILDING_LIBRARY)
#define POWDIAG_API __attribute__((visibility("default")))
#else
#define POWDIAG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pdg_status {
    PDG_OK = 0,
    PDG_ERR_INTERNAL = 1,
    PDG_ERR_PRECONDITION = 2, /* invalid argument or violated precondition */
    PDG_ERR_RESOURCE = 3      /* a memory or search cap would be exceeded */
} pdg_status;

typedef enum pdg_format { PDG_FORMAT_JSON = 0, PDG_FORMAT_CSV = 1 } pdg_format;

typedef enum pdg_mode {
    PDG_MODE_UNRESTRICTED = 0,
    PDG_MODE_SIDE_SUBSUM_FREE = 1,
    PDG_MODE_FULLY_SUBSUM_FREE = 2
} pdg_mode;

typedef struct pdg_context pdg_context;
typedef struct pdg_document pdg_document;

POWDIAG_API const char* pdg_version(void);
POWDIAG_API const char* pdg_status_string(pdg_status status);

POWDIAG_API pdg_context* pdg_context_new(void);
POWDIAG_API void pdg_context_free(pdg_context* ctx);
/* 0 selects the hardware concurrency. */
POWDIAG_API pdg_status pdg_context_set_threads(pdg_context* ctx, unsigned threads);
POWDIAG_API pdg_status pdg_context_set_memory_cap(pdg_context* ctx, uint64_t max_entries);
POWDIAG_API pdg_status pdg_context_set_format(pdg_context* ctx, pdg_format format);
POWDIAG_API const char* pdg_context_last_error(const pdg_context* ctx);

POWDIAG_API const char* pdg_document_text(const pdg_document* doc);
POWDIAG_API size_t pdg_document_size(const pdg_document* doc);
POWDIAG_API void pdg_document_free(pdg_document* doc);

/* Joint solutions of x_1+...+x_k = y_1+...+y_l. */
POWDIAG_API pdg_status pdg_solve(pdg_context* ctx, uint32_t p, uint32_t q, uint32_t k, uint32_t l, uint32_t max_exp,
                                 pdg_mode mode, pdg_document** out);
POWDIAG_API pdg_status pdg_fset(pdg_context* ctx, uint32_t p, uint32_t q, uint32_t k, uint32_t l, uint32_t max_exp,
                                pdg_document** out);
POWDIAG_API pdg_status pdg_fcum(pdg_context* ctx, uint32_t p, uint32_t q, uint32_t s, uint32_t max_exp,
                                pdg_document** out);
POWDIAG_API pdg_status pdg_admissible(pdg_context* ctx, uint32_t p, uint32_t q, uint32_t k, uint32_t l,
                                      uint32_t max_exp, pdg_document** out);
POWDIAG_API pdg_status pdg_saturate(pdg_context* ctx, uint32_t p, uint32_t q, uint32_t k, uint32_t l, pdg_mode mode,
                                    const uint32_t* exp_bounds, size_t n_bounds, pdg_document** out);

/* Weight tables, restricted norms, discreteness certificate. */
POWDIAG_API pdg_status pdg_delta(pdg_context* ctx, uint32_t p, uint32_t q, uint32_t s_max, uint32_t max_exp,
                                 pdg_document** out);
POWDIAG_API pdg_status pdg_norm(pdg_context* ctx, uint32_t p, uint32_t q, uint32_t s_max, uint32_t max_exp,
                                const char* u, uint32_t max_terms, pdg_document** out);
POWDIAG_API pdg_status pdg_diag(pdg_context* ctx, uint32_t p, uint32_t q, uint32_t s, uint32_t max_exp,
                                pdg_document** out);

/* Characters. */
POWDIAG_API pdg_status pdg_char_test(pdg_context* ctx, const char* t, uint32_t p, pdg_document** out);
POWDIAG_API pdg_status pdg_annihilator(pdg_context* ctx, uint32_t p, uint32_t q, pdg_document** out);
POWDIAG_API pdg_status pdg_diag_extend(pdg_context* ctx, const char* t, uint32_t p, uint32_t q, pdg_document** out);
POWDIAG_API pdg_status pdg_witness_x1(pdg_context* ctx, uint32_t p, uint32_t q, pdg_document** out);
POWDIAG_API pdg_status pdg_witness_x2(pdg_context* ctx, uint32_t p, uint32_t q, pdg_document** out);
POWDIAG_API pdg_status pdg_separate(pdg_context* ctx, uint32_t p, uint32_t m, const char* g, pdg_document** out);
POWDIAG_API pdg_status pdg_extend(pdg_context* ctx, uint32_t p, uint32_t m, const char* t, pdg_document** out);

/* Power sums and sequences. */
POWDIAG_API pdg_status pdg_minterms(pdg_context* ctx, const char* u, uint32_t p, uint32_t cap, pdg_document** out);
POWDIAG_API pdg_status pdg_converge(pdg_context* ctx, const char* const* seq, size_t n, uint32_t p, uint32_t k,
                                    uint32_t max_exp, pdg_document** out);
POWDIAG_API pdg_status pdg_interleave(pdg_context* ctx, const char* const* a, size_t na, const char* const* b,
                                      size_t nb, pdg_document** out);

#ifdef __cplusplus
}
#endif

#endif /* POWDIAG_H */
