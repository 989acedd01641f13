#include "qnp.h"

#include <cstring>
#include <new>
#include <string>

#include "core/config.hpp"
#include "core/counting.hpp"
#include "core/errors.hpp"
#include "core/surface.hpp"
#include "core/verify.hpp"

struct qnp_ctx {
    qnp::Config config;
    std::string last_error;
};

namespace {

char* copy_out(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
qnp_status guarded(qnp_ctx* ctx, Fn&& fn) {
    if (!ctx) return QNP_ERROR_USAGE;
    try {
        ctx->last_error.clear();
        return fn();
    } catch (const qnp::UsageError& e) {
        ctx->last_error = e.what();
        return QNP_ERROR_USAGE;
    } catch (const qnp::ConsistencyError& e) {
        ctx->last_error = e.what();
        return QNP_ERROR_CONSISTENCY;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return QNP_ERROR_INTERNAL;
    }
}

qnp_status emit(qnp_ctx* ctx, const std::string& text, char** out) {
    if (!out) {
        ctx->last_error = "null output pointer";
        return QNP_ERROR_USAGE;
    }
    *out = copy_out(text);
    if (!*out) {
        ctx->last_error = "out of memory";
        return QNP_ERROR_INTERNAL;
    }
    return QNP_OK;
}

std::vector<std::string> split_csv(const char* text) {
    std::vector<std::string> out;
    if (!text) return out;
    std::string cur;
    for (const char* p = text;; ++p) {
        if (*p == ',' || *p == '\0') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
            if (*p == '\0') break;
        } else {
            cur += *p;
        }
    }
    return out;
}

}  // namespace

extern "C" {

qnp_ctx* qnp_ctx_new(void) {
    return new (std::nothrow) qnp_ctx();
}

void qnp_ctx_free(qnp_ctx* ctx) {
    delete ctx;
}

const char* qnp_last_error(const qnp_ctx* ctx) {
    return ctx ? ctx->last_error.c_str() : "null context";
}

const char* qnp_version(void) {
    return "0.1.0";
}

void qnp_free(char* text) {
    delete[] text;
}

qnp_status qnp_set_modulus(qnp_ctx* ctx, uint32_t n, const char* poly) {
    return guarded(ctx, [&]() -> qnp_status {
        if (!poly) throw qnp::UsageError("null modulus");
        qnp::gf2::GF2Poly f = qnp::gf2::GF2Poly::parse(poly);
        if (f.degree() != static_cast<int>(n))
            throw qnp::UsageError("modulus degree does not match n");
        if (!qnp::gf2::is_irreducible(f))
            throw qnp::UsageError("modulus " + f.str() + " is reducible");
        ctx->config.modulus_override[static_cast<int>(n)] = std::move(f);
        return QNP_OK;
    });
}

qnp_status qnp_set_beta_exponent(qnp_ctx* ctx, uint32_t n, uint64_t k) {
    return guarded(ctx, [&]() -> qnp_status {
        if (k == 0) throw qnp::UsageError("beta exponent must be positive");
        ctx->config.beta_exponent_override[static_cast<int>(n)] = k;
        // validate eagerly so a bad choice fails here, not mid-table
        ctx->config.basis_for(static_cast<int>(n));
        return QNP_OK;
    });
}

qnp_status qnp_set_precision(qnp_ctx* ctx, double absolute_tolerance) {
    return guarded(ctx, [&]() -> qnp_status {
        if (!(absolute_tolerance > 0) || absolute_tolerance > 0.25)
            throw qnp::UsageError("precision must lie in (0, 0.25]");
        ctx->config.precision = absolute_tolerance;
        return QNP_OK;
    });
}

qnp_status qnp_set_table_budget(qnp_ctx* ctx, uint32_t max_n) {
    return guarded(ctx, [&]() -> qnp_status {
        if (max_n < 1 || max_n > 24) throw qnp::UsageError("table budget must lie in [1, 24]");
        ctx->config.table_budget = static_cast<int>(max_n);
        return QNP_OK;
    });
}

qnp_status qnp_gamma(qnp_ctx* ctx, uint32_t n, uint64_t* out) {
    return guarded(ctx, [&]() -> qnp_status {
        if (!out) throw qnp::UsageError("null output pointer");
        *out = qnp::counting::gamma(static_cast<int>(n));
        return QNP_OK;
    });
}

qnp_status qnp_enumerate(qnp_ctx* ctx, const char* set_name, uint32_t n, const char* fmt,
                         char** out) {
    return guarded(ctx, [&]() -> qnp_status {
        if (!set_name) throw qnp::UsageError("null set name");
        auto format = qnp::surface::parse_format(fmt ? fmt : "plain");
        return emit(ctx,
                    qnp::surface::enumerate_sets(set_name, static_cast<int>(n), format,
                                                 ctx->config),
                    out);
    });
}

qnp_status qnp_map(qnp_ctx* ctx, const char* map_name, const char* input, uint32_t n,
                   const char* fmt, char** out) {
    return guarded(ctx, [&]() -> qnp_status {
        if (!map_name || !input) throw qnp::UsageError("null map name or input");
        auto format = qnp::surface::parse_format(fmt ? fmt : "plain");
        return emit(ctx,
                    qnp::surface::apply_map(map_name, input, static_cast<int>(n), format,
                                            ctx->config),
                    out);
    });
}

qnp_status qnp_table(qnp_ctx* ctx, uint32_t n, const char* fmt, char** out) {
    return guarded(ctx, [&]() -> qnp_status {
        auto format = qnp::surface::parse_format(fmt ? fmt : "plain");
        return emit(ctx, qnp::surface::table_text(static_cast<int>(n), format, ctx->config), out);
    });
}

qnp_status qnp_gleason_poly(qnp_ctx* ctx, uint32_t n, int mod2, int factored, const char* fmt,
                            char** out) {
    return guarded(ctx, [&]() -> qnp_status {
        auto format = qnp::surface::parse_format(fmt ? fmt : "plain");
        return emit(ctx,
                    qnp::surface::gleason_text(static_cast<int>(n), mod2 != 0, factored != 0,
                                               format),
                    out);
    });
}

qnp_status qnp_count_report(qnp_ctx* ctx, uint32_t n, const char* fmt, char** out) {
    return guarded(ctx, [&]() -> qnp_status {
        auto format = qnp::surface::parse_format(fmt ? fmt : "plain");
        return emit(ctx, qnp::surface::count_text(static_cast<int>(n), format), out);
    });
}

qnp_status qnp_verify(qnp_ctx* ctx, uint32_t max_n, const char* suites, uint32_t jobs,
                      const char* fmt, char** out, uint32_t* failures) {
    return guarded(ctx, [&]() -> qnp_status {
        auto format = qnp::surface::parse_format(fmt ? fmt : "plain");
        std::optional<int> cap;
        if (max_n > 0) cap = static_cast<int>(max_n);
        auto checks = qnp::verify::run(split_csv(suites), cap,
                                       jobs == 0 ? 1 : static_cast<int>(jobs), ctx->config);
        uint32_t failed = 0;
        for (const auto& c : checks)
            if (!c.pass) ++failed;
        if (failures) *failures = failed;
        std::string text;
        switch (format) {
            case qnp::surface::Format::Json: text = qnp::verify::render_json(checks); break;
            case qnp::surface::Format::Csv: text = qnp::verify::render_csv(checks); break;
            default: text = qnp::verify::render_plain(checks);
        }
        return emit(ctx, text, out);
    });
}

}  // extern "C"
