#include "vandiver/vandiver.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "vandiver/bernoulli.hpp"
#include "vandiver/criteria.hpp"
#include "vandiver/error.hpp"
#include "vandiver/jacobi.hpp"
#include "vandiver/records.hpp"
#include "vandiver/residue_symbols.hpp"
#include "vandiver/spectra.hpp"

struct vdv_twist {
    vandiver::TwistContext ctx;
};

namespace {

thread_local std::string last_error;

struct BufferTooSmall {};

template <class F>
vdv_status guarded(F&& body) {
    last_error.clear();
    try {
        body();
        return VDV_OK;
    } catch (const BufferTooSmall&) {
        last_error = "output buffer too small";
        return VDV_BUFFER_TOO_SMALL;
    } catch (const vandiver::InvalidArgument& e) {
        last_error = e.what();
        return VDV_INVALID_ARGUMENT;
    } catch (const vandiver::ResourceLimit& e) {
        last_error = e.what();
        return VDV_RESOURCE_LIMIT;
    } catch (const vandiver::IoError& e) {
        last_error = e.what();
        return VDV_IO_ERROR;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return VDV_RESOURCE_LIMIT;
    } catch (const std::exception& e) {
        last_error = e.what();
        return VDV_INTERNAL_ERROR;
    } catch (...) {
        last_error = "unknown error";
        return VDV_INTERNAL_ERROR;
    }
}

template <class T, class Range>
void copy_out(const Range& values, T* out, std::size_t cap, std::size_t* len) {
    if (!len) throw vandiver::InvalidArgument("len must not be NULL");
    *len = values.size();
    if (!out) return;
    if (cap < values.size()) throw BufferTooSmall{};
    std::size_t i = 0;
    for (const auto& v : values) out[i++] = static_cast<T>(v);
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void put_string(char** dst, const std::string& s) {
    if (dst) *dst = dup_string(s);
}

template <class T>
void require(T* ptr, const char* name) {
    if (!ptr) throw vandiver::InvalidArgument(std::string(name) + " must not be NULL");
}

// Owns the cache for the duration of one call.
struct ScanSetup {
    std::optional<vandiver::ScanCache> cache;
    vandiver::ScanOptions opts;

    explicit ScanSetup(const vdv_scan_options* in) {
        if (!in) return;
        if (in->jobs < 1) throw vandiver::InvalidArgument("jobs must be at least 1");
        opts.jobs = in->jobs;
        opts.c = in->c;
        if (in->cache_path && *in->cache_path) {
            cache.emplace(in->cache_path);
            opts.cache = &*cache;
        }
        if (in->on_record) {
            auto cb = in->on_record;
            void* user = in->user;
            opts.on_record = [cb, user](const vandiver::ScanRecord& r) { cb(vandiver::to_json(r).dump().c_str(), user); };
        }
    }
};

std::size_t cap_or_default(std::size_t memory_cap) {
    return memory_cap == 0 ? vandiver::ExactOptions{}.memory_cap_bytes : memory_cap;
}

}  // namespace

extern "C" {

const char* vdv_version(void) { return "1.0.0"; }

const char* vdv_status_name(vdv_status status) {
    switch (status) {
        case VDV_OK: return "ok";
        case VDV_INVALID_ARGUMENT: return "invalid argument";
        case VDV_RESOURCE_LIMIT: return "resource limit";
        case VDV_INTERNAL_ERROR: return "internal error";
        case VDV_IO_ERROR: return "i/o error";
        case VDV_BUFFER_TOO_SMALL: return "buffer too small";
    }
    return "unknown status";
}

const char* vdv_last_error(void) { return last_error.c_str(); }

void vdv_string_free(char* s) { std::free(s); }

vdv_status vdv_is_prime(uint64_t n, int* out) {
    return guarded([&] {
        require(out, "out");
        *out = vandiver::is_prime(n) ? 1 : 0;
    });
}

vdv_status vdv_primitive_root(uint64_t q, uint64_t* out) {
    return guarded([&] {
        require(out, "out");
        *out = vandiver::primitive_root(q);
    });
}

vdv_status vdv_split_primes(uint32_t p, uint64_t l_max, size_t count, uint64_t* out, size_t* len) {
    return guarded([&] {
        require(len, "len");
        vandiver::SplitPrimeStream stream(p, l_max == 0 ? std::nullopt : std::optional<std::uint64_t>(l_max));
        const auto ls = stream.take(count);
        *len = ls.size();
        if (out)
            for (std::size_t i = 0; i < ls.size(); ++i) out[i] = ls[i];
    });
}

vdv_status vdv_twist_create(uint32_t p, uint64_t l, uint32_t c, uint64_t g, vdv_twist** out) {
    return guarded([&] {
        require(out, "out");
        *out = new vdv_twist{vandiver::TwistContext(p, l, c, g)};
    });
}

void vdv_twist_destroy(vdv_twist* t) { delete t; }

vdv_status vdv_twist_params(const vdv_twist* t, uint32_t* p, uint64_t* l, uint32_t* c, uint64_t* g) {
    return guarded([&] {
        require(t, "twist");
        if (p) *p = t->ctx.p();
        if (l) *l = t->ctx.l();
        if (c) *c = t->ctx.c();
        if (g) *g = t->ctx.g();
    });
}

vdv_status vdv_jacobi_sum(const vdv_twist* t, uint32_t i, uint32_t* out, size_t cap, size_t* len) {
    return guarded([&] {
        require(t, "twist");
        copy_out(vandiver::jacobi_sum(t->ctx, i).coeffs(), out, cap, len);
    });
}

vdv_status vdv_twist_product(const vdv_twist* t, uint32_t* out, size_t cap, size_t* len) {
    return guarded([&] {
        require(t, "twist");
        copy_out(vandiver::twist_product(t->ctx).coeffs(), out, cap, len);
    });
}

vdv_status vdv_component_is_one(const vdv_twist* t, uint32_t n, int* out) {
    return guarded([&] {
        require(t, "twist");
        require(out, "out");
        const auto J = vandiver::twist_product(t->ctx);
        *out = vandiver::is_one(vandiver::component(t->ctx, J, n)) ? 1 : 0;
    });
}

vdv_status vdv_exponent_set(const vdv_twist* t, int by_products, uint32_t* out, size_t cap, size_t* len) {
    return guarded([&] {
        require(t, "twist");
        const auto set = by_products ? vandiver::exponent_set_by_products(t->ctx) : vandiver::exponent_set(t->ctx);
        copy_out(set.members(), out, cap, len);
    });
}

vdv_status vdv_irregular_exponents(uint32_t p, uint32_t* out, size_t cap, size_t* len) {
    return guarded([&] { copy_out(vandiver::irregularity_report(p).set.members(), out, cap, len); });
}

vdv_status vdv_b1_omega(uint32_t p, uint32_t m, uint32_t* out) {
    return guarded([&] {
        require(out, "out");
        *out = vandiver::b1_omega(p, m);
    });
}

vdv_status vdv_b_c_factor(uint32_t p, uint32_t c, uint32_t n, uint32_t* out) {
    return guarded([&] {
        require(out, "out");
        *out = vandiver::b_c_factor(p, c, n);
    });
}

void vdv_scan_options_init(vdv_scan_options* opts) {
    if (!opts) return;
    opts->jobs = 1;
    opts->c = 0;
    opts->cache_path = nullptr;
    opts->on_record = nullptr;
    opts->user = nullptr;
}

vdv_status vdv_scan_record(uint32_t p, uint64_t l, const vdv_scan_options* opts, char** json) {
    return guarded([&] {
        require(json, "json");
        ScanSetup setup(opts);
        const auto records = vandiver::scan_records(p, {l}, setup.opts);
        put_string(json, vandiver::to_json(records.front()).dump());
    });
}

vdv_status vdv_criterion_a(uint32_t p, uint64_t l, const vdv_scan_options* opts, int* holds, char** json) {
    return guarded([&] {
        ScanSetup setup(opts);
        const auto v = vandiver::criterion_a(p, l, setup.opts);
        if (holds) *holds = v.holds ? 1 : 0;
        put_string(json, v.to_json().dump());
    });
}

vdv_status vdv_criterion_b(uint32_t p, uint32_t max_n, uint64_t l_max, const vdv_scan_options* opts, int* holds,
                           char** json) {
    return guarded([&] {
        ScanSetup setup(opts);
        vandiver::SplitPrimeStream stream(p, l_max == 0 ? std::nullopt : std::optional<std::uint64_t>(l_max));
        const auto v = vandiver::criterion_b(p, stream, max_n, setup.opts);
        if (holds) *holds = v.holds ? 1 : 0;
        put_string(json, v.to_json().dump());
    });
}

vdv_status vdv_minimal_empty_l(uint32_t p, uint64_t l_max, const vdv_scan_options* opts, int* found, uint64_t* l,
                               uint32_t* index) {
    return guarded([&] {
        require(found, "found");
        ScanSetup setup(opts);
        const auto r = vandiver::minimal_empty_l(p, l_max, setup.opts);
        *found = r ? 1 : 0;
        if (l) *l = r ? r->l : 0;
        if (index) *index = r ? r->index : 0;
    });
}

vdv_status vdv_density_scan(uint32_t p, uint64_t count, const vdv_scan_options* opts, char** json) {
    return guarded([&] {
        require(json, "json");
        ScanSetup setup(opts);
        put_string(json, vandiver::density_scan(p, count, setup.opts).to_json().dump());
    });
}

vdv_status vdv_classify(const vdv_twist* t, uint32_t n, size_t memory_cap, vdv_symbol_report* out, char** json) {
    return guarded([&] {
        require(t, "twist");
        const auto r = vandiver::classify(t->ctx, n, {cap_or_default(memory_cap)});
        if (out) {
            out->p = r.p;
            out->n = r.n;
            out->l = r.l;
            out->g = r.g;
            out->v = r.v;
            out->s = r.s;
            out->u = r.u;
            out->local_at_p = r.local_at_p ? 1 : 0;
            out->local_at_L = r.local_at_L ? 1 : 0;
            out->classification = static_cast<vdv_symbol_class>(r.classification);
        }
        if (json) {
            auto j = r.to_json();
            j["lines"] = r.text_lines();
            put_string(json, j.dump());
        }
    });
}

vdv_status vdv_exact_component(const vdv_twist* t, uint32_t n, size_t memory_cap, char** poly) {
    return guarded([&] {
        require(t, "twist");
        require(poly, "poly");
        put_string(poly, vandiver::exact_twist_component(t->ctx, n, {cap_or_default(memory_cap)}).to_string());
    });
}

vdv_status vdv_exact_component_norm(const vdv_twist* t, uint32_t n, size_t memory_cap, char** decimal) {
    return guarded([&] {
        require(t, "twist");
        require(decimal, "decimal");
        const auto sn = vandiver::exact_twist_component(t->ctx, n, {cap_or_default(memory_cap)});
        put_string(decimal, vandiver::norm(sn).get_str());
    });
}

vdv_status vdv_rank_scan(uint32_t p, uint32_t target, uint64_t l_max, uint64_t max_count, unsigned jobs, uint32_t c,
                         char** json) {
    return guarded([&] {
        require(json, "json");
        if (jobs < 1) throw vandiver::InvalidArgument("jobs must be at least 1");
        vandiver::RankScanOptions opts;
        opts.jobs = jobs;
        opts.c = c;
        if (target != 0) opts.target = target;
        if (max_count != 0) opts.max_count = max_count;
        vandiver::SplitPrimeStream stream(p, l_max == 0 ? std::nullopt : std::optional<std::uint64_t>(l_max));
        const auto r = vandiver::rank_scan(p, stream, opts);
        auto j = r.to_json();
        j["text"] = r.text_line();
        put_string(json, j.dump());
    });
}

vdv_status vdv_conjugate_rank(uint32_t p, uint64_t l, uint32_t c, uint32_t* out) {
    return guarded([&] {
        require(out, "out");
        *out = vandiver::conjugate_rank(p, l, c);
    });
}

vdv_status vdv_derivation_check(const vdv_twist* t, int* out) {
    return guarded([&] {
        require(t, "twist");
        require(out, "out");
        *out = vandiver::derivation_check(vandiver::twist_product(t->ctx)) ? 1 : 0;
    });
}

vdv_status vdv_trace_polynomial(uint32_t p, uint64_t l, uint64_t g, int dense, uint32_t* out, size_t cap,
                                size_t* len, uint32_t* f) {
    return guarded([&] {
        const auto route = dense ? vandiver::TraceRoute::dense : vandiver::TraceRoute::multimodular;
        const auto tp = vandiver::trace_polynomial(p, l, g, route);
        if (f) *f = tp.f;
        copy_out(tp.coeffs, out, cap, len);
    });
}

vdv_status vdv_trace_polynomial_json(uint32_t p, uint64_t l, char** json) {
    return guarded([&] {
        require(json, "json");
        const auto tp = vandiver::trace_polynomial(p, l);
        auto j = tp.to_json();
        j["text"] = tp.text_line();
        put_string(json, j.dump());
    });
}

vdv_status vdv_distinct_traces(uint32_t p, uint64_t bound, unsigned jobs, const char* catalog_path,
                               vdv_record_callback on_trace, void* user, char** json) {
    return guarded([&] {
        if (jobs < 1) throw vandiver::InvalidArgument("jobs must be at least 1");
        std::optional<vandiver::TraceCatalog> catalog;
        vandiver::DistinctTraceOptions opts;
        opts.jobs = jobs;
        if (catalog_path && *catalog_path) {
            catalog.emplace(catalog_path);
            opts.catalog = &*catalog;
        }
        if (on_trace)
            opts.on_trace = [on_trace, user](const vandiver::TracePolynomial& t) {
                auto j = t.to_json();
                j["text"] = t.text_line();
                on_trace(j.dump().c_str(), user);
            };
        const auto r = vandiver::distinct_trace_count(p, bound, opts);
        put_string(json, r.to_json().dump());
    });
}

vdv_status vdv_heuristic_probability(uint32_t p, double* out) {
    return guarded([&] {
        require(out, "out");
        *out = vandiver::heuristic_probability(p);
    });
}

}  // extern "C"
