// Command-line front end.  Everything goes through the C API in bisym.h; the
// kernel headers are deliberately not included here.

#include <bisym.h>

#include <CLI11.hpp>

#include <cstdio>
#include <cstring>
#include <string>

namespace {

int report_failure(bisym_status st) {
    std::fprintf(stderr, "error: %s\n", bisym_last_error());
    return st == BISYM_ERR_INVALID_ARGUMENT ? 2 : 1;
}

void print_payload(const char* text) {
    std::fputs(text, stdout);
    size_t n = std::strlen(text);
    if (n == 0 || text[n - 1] != '\n') std::fputc('\n', stdout);
}

struct eval_options {
    std::string expr;
    int deg_x = 6;
    int deg_y = 6;
    int hbar_min = -8;
    int hbar_max = 8;
    std::string basis = "schur";
    std::string format = "text";
};

int run_eval(const eval_options& o) {
    bisym_series_t* series = nullptr;
    bisym_status st = bisym_eval(o.expr.c_str(), o.deg_x, o.deg_y, o.hbar_min,
                                 o.hbar_max, &series);
    if (st != BISYM_OK) return report_failure(st);
    char* text = nullptr;
    st = bisym_series_render(series, o.basis.c_str(), o.format.c_str(), &text);
    if (st != BISYM_OK) {
        bisym_series_destroy(series);
        return report_failure(st);
    }
    int dropped = 0;
    bisym_series_dropped(series, &dropped);
    if (dropped)
        std::fputs("note: some terms fell outside the truncation and were cut; "
                   "the output is exact in the quotient\n",
                   stderr);
    print_payload(text);
    bisym_string_free(text);
    bisym_series_destroy(series);
    return 0;
}

struct autfn_options {
    std::string variant = "Qprime";
    int d = 0;
    int q_max = 6;
    int p_max = 6;
    int threads = 1;
    std::string format = "text";
};

int run_autfn(const autfn_options& o) {
    bisym_report_t* report = nullptr;
    bisym_status st = bisym_autfn(o.variant.c_str(), o.d, o.q_max, o.p_max,
                                  o.threads, &report);
    if (st != BISYM_OK) return report_failure(st);
    char* text = nullptr;
    st = bisym_report_render(report, o.format.c_str(), &text);
    if (st != BISYM_OK) {
        bisym_report_destroy(report);
        return report_failure(st);
    }
    if (o.variant == "Qtilde") {
        // No published reference list exists for this variant; flag the output.
        const char* banner = "# derived output (no reference list for this variant)";
        if (o.format == "text")
            std::printf("%s\n", banner);
        else
            std::fprintf(stderr, "%s\n", banner);
    }
    print_payload(text);
    bisym_string_free(text);
    bisym_report_destroy(report);
    return 0;
}

struct counts_options {
    int d_max = 1;
    int threads = 1;
    std::string format = "text";
};

int run_counts(const counts_options& o) {
    char* text = nullptr;
    bisym_status st = bisym_counts(o.d_max, o.threads, o.format.c_str(), &text);
    if (st != BISYM_OK) return report_failure(st);
    print_payload(text);
    bisym_string_free(text);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact plethysm and box-product computations on truncated "
                 "bisymmetric series"};
    app.require_subcommand(1);

    eval_options eo;
    CLI::App* eval = app.add_subcommand("eval", "evaluate an expression");
    eval->add_option("expr", eo.expr, "expression, e.g. \"sat(p[1](x)*p[1](y))\"")
        ->required();
    eval->add_option("--deg-x", eo.deg_x, "x-degree bound")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    eval->add_option("--deg-y", eo.deg_y, "y-degree bound")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    eval->add_option("--hbar-min", eo.hbar_min, "lowest hbar exponent kept")
        ->capture_default_str();
    eval->add_option("--hbar-max", eo.hbar_max, "highest hbar exponent kept")
        ->capture_default_str();
    eval->add_option("--basis", eo.basis, "output basis")
        ->check(CLI::IsMember({"p", "schur"}))
        ->capture_default_str();
    eval->add_option("--format", eo.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    autfn_options ao;
    CLI::App* autfn = app.add_subcommand(
        "autfn", "decomposition report for one bimodule variant and degree");
    autfn->add_option("--variant", ao.variant, "generator family")
        ->check(CLI::IsMember({"Q", "Qtilde", "Qprime"}))
        ->capture_default_str();
    autfn->add_option("--d", ao.d, "hbar degree of the report")
        ->check(CLI::NonNegativeNumber)
        ->required();
    autfn->add_option("--q-max", ao.q_max, "largest x-weight reported")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    autfn->add_option("--p-max", ao.p_max, "largest y-weight reported")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    autfn->add_option("--threads", ao.threads, "worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    autfn->add_option("--format", ao.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    counts_options co;
    CLI::App* counts = app.add_subcommand(
        "counts", "tabulate row counts and total multiplicities by degree");
    counts->add_option("--d-max", co.d_max, "largest degree tabulated")
        ->check(CLI::PositiveNumber)
        ->required();
    counts->add_option("--threads", co.threads, "worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    counts->add_option("--format", co.format, "output format; text is CSV")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (eval->parsed()) return run_eval(eo);
    if (autfn->parsed()) return run_autfn(ao);
    return run_counts(co);
}
