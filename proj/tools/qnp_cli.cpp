// Command-line front end; talks to the core exclusively through the
// public C interface in qnp.h.
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qnp.h"

namespace {

struct CtxDeleter {
    void operator()(qnp_ctx* ctx) const { qnp_ctx_free(ctx); }
};
using CtxPtr = std::unique_ptr<qnp_ctx, CtxDeleter>;

struct Options {
    std::string format = "plain";
    std::string modulus;
    std::uint64_t beta_exp = 0;
    double precision = 0;
    unsigned max_n = 0;
    unsigned jobs = 1;
};

// exit codes: 0 ok, 1 verification/consistency failure, 2 usage error
int status_exit_code(qnp_status s) {
    return s == QNP_ERROR_USAGE ? 2 : 1;
}

int fail(qnp_ctx* ctx, qnp_status s) {
    std::fprintf(stderr, "error: %s\n", qnp_last_error(ctx));
    return status_exit_code(s);
}

int apply_config(qnp_ctx* ctx, const Options& opt, unsigned n_for_overrides) {
    qnp_status s = QNP_OK;
    (void)s;
    if (!opt.modulus.empty()) s = qnp_set_modulus(ctx, n_for_overrides, opt.modulus.c_str());
    if (s == QNP_OK && opt.beta_exp)
        s = qnp_set_beta_exponent(ctx, n_for_overrides, opt.beta_exp);
    if (s == QNP_OK && opt.precision > 0) s = qnp_set_precision(ctx, opt.precision);
    if (s == QNP_OK && opt.max_n) s = qnp_set_table_budget(ctx, opt.max_n);
    return s == QNP_OK ? 0 : fail(ctx, s);
}

int print_result(qnp_ctx* ctx, qnp_status s, char* text) {
    if (s != QNP_OK) return fail(ctx, s);
    std::fputs(text, stdout);
    qnp_free(text);
    return 0;
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "Output format: plain, json, csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
}

void add_basis_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--modulus", opt.modulus,
                    "Field modulus for the given n (e.g. x^4+x+1 or 0x13)");
    cmd->add_option("--beta-exp", opt.beta_exp, "Exponent k for the normal-basis element a^k");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Bijections between binary necklaces, cyclic unimodal permutations,\n"
        "mod-2 Gleason factors, doubling-map cycles, and real critical orbits\n"
        "of z^2 + c: enumeration, single maps, correspondence tables, exact\n"
        "counts, and exhaustive cross-check suites."};
    app.require_subcommand(1);
    Options opt;

    unsigned n = 0;
    std::string set_name, map_name, map_input, suites;
    bool mod2 = false, factored = false;

    CLI::App* enumerate = app.add_subcommand("enumerate", "List one of the gamma_n-sized sets");
    enumerate->add_option("--set", set_name, "n-, n+, n~+, nbar, nbar1, nbar2, cup, i-, i~+, dbar")
        ->required();
    enumerate->add_option("--n", n, "Word length / degree")->required();
    add_common(enumerate, opt);
    add_basis_options(enumerate, opt);

    CLI::App* map = app.add_subcommand("map", "Apply a single correspondence map");
    map->add_option("name", map_name, "Map name (see README)")->required();
    map->add_option("input", map_input, "Input in its text form")->required();
    map->add_option("--n", n, "Field degree where one is needed (reutenauer)");
    add_common(map, opt);
    add_basis_options(map, opt);

    CLI::App* table = app.add_subcommand("table", "Correspondence rows for period n");
    table->add_option("--n", n, "Period")->required();
    table->add_option("--max-n", opt.max_n, "Raise the table budget (default 10)");
    table->add_option("--precision", opt.precision, "Root refinement width (default 1e-12)");
    add_common(table, opt);
    add_basis_options(table, opt);

    CLI::App* gleason = app.add_subcommand("gleason", "Print the degree-n Gleason polynomial");
    gleason->add_option("--n", n, "Index n")->required();
    gleason->add_flag("--mod2", mod2, "Reduce modulo 2");
    gleason->add_flag("--factor", factored, "Also list the mod-2 irreducible factors");
    add_common(gleason, opt);

    CLI::App* count = app.add_subcommand("count", "Exact counting report for one n");
    count->add_option("--n", n, "Word length")->required();
    add_common(count, opt);

    CLI::App* verify = app.add_subcommand("verify", "Run the cross-check suites");
    verify->add_option("--max-n", opt.max_n, "Ceiling for every suite (default: per suite)");
    verify->add_option("--suites", suites,
                       "Comma-separated: bijections,weiss_rogers,gf2,gleason,counting,dynamics");
    verify->add_option("--jobs", opt.jobs, "Worker threads");
    verify->add_option("--precision", opt.precision, "Root refinement width");
    add_common(verify, opt);
    add_basis_options(verify, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    CtxPtr ctx(qnp_ctx_new());
    if (!ctx) {
        std::fprintf(stderr, "error: context allocation failed\n");
        return 1;
    }
    if (int rc = apply_config(ctx.get(), opt, n)) return rc;

    char* text = nullptr;
    qnp_status s = QNP_OK;
    if (enumerate->parsed()) {
        s = qnp_enumerate(ctx.get(), set_name.c_str(), n, opt.format.c_str(), &text);
        return print_result(ctx.get(), s, text);
    }
    if (map->parsed()) {
        s = qnp_map(ctx.get(), map_name.c_str(), map_input.c_str(), n, opt.format.c_str(), &text);
        return print_result(ctx.get(), s, text);
    }
    if (table->parsed()) {
        s = qnp_table(ctx.get(), n, opt.format.c_str(), &text);
        return print_result(ctx.get(), s, text);
    }
    if (gleason->parsed()) {
        s = qnp_gleason_poly(ctx.get(), n, mod2 ? 1 : 0, factored ? 1 : 0, opt.format.c_str(),
                             &text);
        return print_result(ctx.get(), s, text);
    }
    if (count->parsed()) {
        s = qnp_count_report(ctx.get(), n, opt.format.c_str(), &text);
        return print_result(ctx.get(), s, text);
    }
    if (verify->parsed()) {
        uint32_t failures = 0;
        s = qnp_verify(ctx.get(), opt.max_n, suites.c_str(), opt.jobs, opt.format.c_str(), &text,
                       &failures);
        if (s != QNP_OK) return fail(ctx.get(), s);
        std::fputs(text, stdout);
        qnp_free(text);
        return failures == 0 ? 0 : 1;
    }
    return 2;
}
