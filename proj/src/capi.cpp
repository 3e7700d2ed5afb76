#include "powdiag/powdiag.h"

#include "powdiag/serialize.hpp"

#include <new>
#include <string>

using powdiag::BigInt;
using powdiag::Prime;
using powdiag::io::Json;

struct pdg_context {
    powdiag::SearchOptions opts;
    pdg_format format = PDG_FORMAT_JSON;
    std::string last_error;
};

struct pdg_document {
    std::string text;
};

namespace {

struct Rendered {
    Json doc;
    std::string table_key;
};

template <class F>
pdg_status run(pdg_context* ctx, pdg_document** out, F&& compute) {
    if (!ctx) return PDG_ERR_PRECONDITION;
    ctx->last_error.clear();
    if (!out) {
        ctx->last_error = "output document pointer is null";
        return PDG_ERR_PRECONDITION;
    }
    *out = nullptr;
    try {
        Rendered r = compute();
        auto* doc = new pdg_document;
        doc->text = ctx->format == PDG_FORMAT_CSV ? powdiag::io::to_csv(r.doc, r.table_key) : powdiag::io::to_text(r.doc);
        *out = doc;
        return PDG_OK;
    } catch (const powdiag::PreconditionError& e) {
        ctx->last_error = e.what();
        return PDG_ERR_PRECONDITION;
    } catch (const powdiag::ResourceError& e) {
        ctx->last_error = e.what();
        return PDG_ERR_RESOURCE;
    } catch (const std::bad_alloc&) {
        ctx->last_error = "out of memory";
        return PDG_ERR_RESOURCE;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return PDG_ERR_INTERNAL;
    }
}

powdiag::SubsumMode to_mode(pdg_mode m) {
    switch (m) {
        case PDG_MODE_UNRESTRICTED: return powdiag::SubsumMode::Unrestricted;
        case PDG_MODE_SIDE_SUBSUM_FREE: return powdiag::SubsumMode::SideSubsumFree;
        case PDG_MODE_FULLY_SUBSUM_FREE: return powdiag::SubsumMode::FullySubsumFree;
    }
    throw powdiag::PreconditionError("unknown subsum mode");
}

std::string need(const char* s, const char* what) {
    if (!s) throw powdiag::PreconditionError(std::string(what) + " is null");
    return s;
}

std::vector<BigInt> integers(const char* const* items, std::size_t n, const char* what) {
    if (n > 0 && !items) throw powdiag::PreconditionError(std::string(what) + " is null");
    std::vector<BigInt> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(powdiag::parse_integer(need(items[i], what)));
    return out;
}

}  // namespace

extern "C" {

const char* pdg_version(void) { return "0.1.0"; }

const char* pdg_status_string(pdg_status status) {
    switch (status) {
        case PDG_OK: return "ok";
        case PDG_ERR_INTERNAL: return "internal error";
        case PDG_ERR_PRECONDITION: return "precondition violated";
        case PDG_ERR_RESOURCE: return "resource cap exceeded";
    }
    return "unknown status";
}

pdg_context* pdg_context_new(void) { return new (std::nothrow) pdg_context; }

void pdg_context_free(pdg_context* ctx) { delete ctx; }

pdg_status pdg_context_set_threads(pdg_context* ctx, unsigned threads) {
    if (!ctx) return PDG_ERR_PRECONDITION;
    ctx->opts.threads = threads;
    return PDG_OK;
}

pdg_status pdg_context_set_memory_cap(pdg_context* ctx, uint64_t max_entries) {
    if (!ctx || max_entries == 0) return PDG_ERR_PRECONDITION;
    ctx->opts.memory_cap = max_entries;
    return PDG_OK;
}

pdg_status pdg_context_set_format(pdg_context* ctx, pdg_format format) {
    if (!ctx || (format != PDG_FORMAT_JSON && format != PDG_FORMAT_CSV)) return PDG_ERR_PRECONDITION;
    ctx->format = format;
    return PDG_OK;
}

const char* pdg_context_last_error(const pdg_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

const char* pdg_document_text(const pdg_document* doc) { return doc ? doc->text.c_str() : nullptr; }

size_t pdg_document_size(const pdg_document* doc) { return doc ? doc->text.size() : 0; }

void pdg_document_free(pdg_document* doc) { delete doc; }

pdg_status pdg_solve(pdg_context* ctx, uint32_t p, uint32_t q, uint32_t k, uint32_t l, uint32_t max_exp, pdg_mode mode,
                     pdg_document** out) {
    return run(ctx, out, [&]() -> Rendered {
        return {powdiag::io::to_json(
                    powdiag::enumerate_joint_solutions(Prime(p), Prime(q), k, l, max_exp, to_mode(mode), ctx->opts)),
                ""};
    });
}

pdg_status pdg_fset(pdg_context* ctx, uint32_t p, uint32_t q, uint32_t k, uint32_t l, uint32_t max_exp,
                    pdg_document** out) {
    return run(ctx, out, [&]() -> Rendered {
        Json j{{"p", p}, {"q", q}, {"k", k}, {"l", l}, {"max_exp", max_exp}};
        j.update(powdiag::io::to_json(powdiag::f_set(Prime(p), Prime(q), k, l, max_exp, ctx->opts)));
        return {j, "powers"};
    });
}

pdg_status pdg_fcum(pdg_context* ctx, uint32_t p, uint32_t q, uint32_t s, uint32_t max_exp, pdg_document** out) {
    return run(ctx, out, [&]() -> Rendered {
        Json j{{"p", p}, {"q", q}, {"s", s}, {"max_exp", max_exp}};
        j.update(powdiag::io::to_json(powdiag::f_cumulative(Prime(p), Prime(q), s, max_exp, ctx->opts)));
        return {j, "powers"};
    });
}

pdg_status pdg_admissible(pdg_context* ctx, uint32_t p, uint32_t q, uint32_t k, uint32_t l, uint32_t max_exp,
                          pdg_document** out) {
    return run(ctx, out, [&]() -> Rendered {
        Json j{{"p", p}, {"q", q}, {"k", k}, {"l", l}, {"max_exp", max_exp}};
        j["values"] = powdiag::io::to_json(powdiag::admissible_sums(Prime(p), Prime(q), k, l, max_exp, ctx->opts));
        return {j, "values"};
    });
}

pdg_status pdg_saturate(pdg_context* ctx, uint32_t p, uint32_t q, uint32_t k, uint32_t l, pdg_mode mode,
                        const uint32_t* exp_bounds, size_t n_bounds, pdg_document** out) {
    return run(ctx, out, [&]() -> Rendered {
        if (n_bounds > 0 && !exp_bounds) throw powdiag::PreconditionError("exponent bounds are null");
        if (n_bounds == 0) throw powdiag::PreconditionError("at least one exponent bound is required");
        std::vector<std::uint32_t> bounds(exp_bounds, exp_bounds + n_bounds);
        return {powdiag::io::to_json(
                    powdiag::saturation_report(Prime(p), Prime(q), k, l, to_mode(mode), bounds, ctx->opts)),
                "rows"};
    });
}

pdg_status pdg_delta(pdg_context* ctx, uint32_t p, uint32_t q, uint32_t s_max, uint32_t max_exp, pdg_document** out) {
    return run(ctx, out, [&]() -> Rendered {
        return {powdiag::io::to_json(powdiag::build_delta(Prime(p), Prime(q), s_max, max_exp, ctx->opts)), "entries"};
    });
}

pdg_status pdg_norm(pdg_context* ctx, uint32_t p, uint32_t q, uint32_t s_max, uint32_t max_exp, const char* u,
                    uint32_t max_terms, pdg_document** out) {
    return run(ctx, out, [&]() -> Rendered {
        const BigInt value = powdiag::parse_integer(need(u, "u"));
        if (max_terms < 1) throw powdiag::PreconditionError("max_terms must be >= 1");
        if (value == 0) {
            // The empty sum; no table is needed.
            return {powdiag::io::to_json(powdiag::NormBound{0, powdiag::SignedPowerSum(Prime(p))}), ""};
        }
        const auto table = powdiag::build_delta(Prime(p), Prime(q), s_max, max_exp, ctx->opts);
        return {powdiag::io::to_json(powdiag::restricted_norm(value, table, max_terms, ctx->opts)), ""};
    });
}

pdg_status pdg_diag(pdg_context* ctx, uint32_t p, uint32_t q, uint32_t s, uint32_t max_exp, pdg_document** out) {
    return run(ctx, out, [&]() -> Rendered {
        return {powdiag::io::to_json(powdiag::diagonal_discreteness_certificate(Prime(p), Prime(q), s, max_exp, ctx->opts)),
                ""};
    });
}

pdg_status pdg_char_test(pdg_context* ctx, const char* t, uint32_t p, pdg_document** out) {
    return run(ctx, out, [&]() -> Rendered {
        const auto x = powdiag::TorusElement::parse(need(t, "t"));
        const Prime prime(p);
        Json support = Json::array();
        for (auto f : powdiag::denominator_support(x).primes()) support.push_back(f);
        return {Json{{"t", x.to_string()},
                     {"p", p},
                     {"is_p_power_character", powdiag::is_p_power_character(x, prime)},
                     {"denominator_support", std::move(support)}},
                ""};
    });
}

pdg_status pdg_annihilator(pdg_context* ctx, uint32_t p, uint32_t q, pdg_document** out) {
    return run(ctx, out, [&]() -> Rendered {
        return {powdiag::io::to_json(powdiag::diagonal_annihilator(Prime(p), Prime(q))), "derivation"};
    });
}

pdg_status pdg_diag_extend(pdg_context* ctx, const char* t, uint32_t p, uint32_t q, pdg_document** out) {
    return run(ctx, out, [&]() -> Rendered {
        const auto x = powdiag::TorusElement::parse(need(t, "t"));
        const auto r = powdiag::is_extendable_diag_char(x, Prime(p), Prime(q));
        Json j{{"t", x.to_string()}, {"extendable", r.extendable}};
        if (r.extendable) {
            j["alpha"] = r.alpha.to_string();
            j["beta"] = r.beta.to_string();
        }
        return {j, ""};
    });
}

pdg_status pdg_witness_x1(pdg_context* ctx, uint32_t p, uint32_t q, pdg_document** out) {
    return run(ctx, out, [&]() -> Rendered {
        return {powdiag::io::to_json(powdiag::x1_witness(Prime(p), Prime(q))), "derivation"};
    });
}

pdg_status pdg_witness_x2(pdg_context* ctx, uint32_t p, uint32_t q, pdg_document** out) {
    return run(ctx, out, [&]() -> Rendered {
        const Prime pp(p), qq(q);
        const auto w = powdiag::x2_witness(pp, qq);
        return {Json{{"witness", w.to_string()}, {"extendable", powdiag::is_extendable_diag_char(w, pp, qq).extendable}},
                ""};
    });
}

pdg_status pdg_separate(pdg_context* ctx, uint32_t p, uint32_t m, const char* g, pdg_document** out) {
    return run(ctx, out, [&]() -> Rendered {
        const Prime prime(p);
        const BigInt gv = powdiag::parse_integer(need(g, "g"));
        const auto chi = powdiag::separating_character(prime, m, gv);
        const auto at_g = chi * gv;
        const std::string pm = powdiag::pow(prime, m).get_str();
        return {Json{{"witness", chi.to_string()},
                     {"value_at_g", at_g.to_string()},
                     {"derivation",
                      {"chi = " + chi.to_string() + " has denominator " + pm + ", so chi(x) = 0 mod 1 for x in " + pm +
                           "Z",
                       "chi(" + gv.get_str() + ") = " + at_g.to_string() + " != 0 since " + pm + " does not divide " +
                           gv.get_str()}}},
                "derivation"};
    });
}

pdg_status pdg_extend(pdg_context* ctx, uint32_t p, uint32_t m, const char* t, pdg_document** out) {
    return run(ctx, out, [&]() -> Rendered {
        const Prime prime(p);
        const auto x = powdiag::TorusElement::parse(need(t, "t"));
        const auto ext = powdiag::extend_subgroup_character(prime, m, x);
        const BigInt pm = powdiag::pow(prime, m);
        return {Json{{"witness", ext.to_string()},
                     {"derivation",
                      {"t' = t / " + pm.get_str() + " mod 1 = " + ext.to_string(),
                       pm.get_str() + " * t' = " + (ext * pm).to_string() + " = t mod 1"}}},
                "derivation"};
    });
}

pdg_status pdg_minterms(pdg_context* ctx, const char* u, uint32_t p, uint32_t cap, pdg_document** out) {
    return run(ctx, out, [&]() -> Rendered {
        const BigInt value = powdiag::parse_integer(need(u, "u"));
        const Prime prime(p);
        if (cap < 1) throw powdiag::PreconditionError("cap must be >= 1");
        auto rep = powdiag::min_terms_rep(value, prime, cap);
        Json j{{"u", value.get_str()}, {"p", p}, {"cap", cap}};
        j["min_terms"] = rep ? Json(rep->size()) : Json();
        j["exceeds_cap"] = !rep.has_value();
        j["rep"] = rep ? Json(rep->to_string()) : Json();
        return {j, ""};
    });
}

pdg_status pdg_converge(pdg_context* ctx, const char* const* seq, size_t n, uint32_t p, uint32_t k, uint32_t max_exp,
                        pdg_document** out) {
    return run(ctx, out, [&]() -> Rendered {
        return {powdiag::io::to_json(powdiag::convergence_certificate(integers(seq, n, "sequence"), Prime(p), k, max_exp)),
                "witnesses"};
    });
}

pdg_status pdg_interleave(pdg_context* ctx, const char* const* a, size_t na, const char* const* b, size_t nb,
                          pdg_document** out) {
    return run(ctx, out, [&]() -> Rendered {
        return {powdiag::io::to_json(powdiag::interleave(integers(a, na, "first sequence"), integers(b, nb, "second sequence"))),
                ""};
    });
}

}  // extern "C"
