#include "bisym.h"

#include "applications.hpp"
#include "error.hpp"
#include "exprlang.hpp"
#include "serialize.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct bisym_series {
    bisym::bisym_series impl;
};

struct bisym_report {
    bisym::decomposition_report impl;
};

namespace {

thread_local std::string tl_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

bisym_status invalid(const char* msg) {
    tl_last_error = msg;
    return BISYM_ERR_INVALID_ARGUMENT;
}

// Run fn, translating everything thrown into a status + last_error message.
template <class Fn>
bisym_status guarded(Fn&& fn) {
    try {
        tl_last_error.clear();
        fn();
        return BISYM_OK;
    } catch (const bisym::parse_error& e) {
        tl_last_error = e.what();
        return BISYM_ERR_PARSE;
    } catch (const bisym::window_error& e) {
        tl_last_error = e.what();
        return BISYM_ERR_OVERFLOW;
    } catch (const bisym::domain_error& e) {
        tl_last_error = e.what();
        return BISYM_ERR_DOMAIN;
    } catch (const std::exception& e) {
        tl_last_error = e.what();
        return BISYM_ERR_INTERNAL;
    } catch (...) {
        tl_last_error = "unknown failure";
        return BISYM_ERR_INTERNAL;
    }
}

} // namespace

extern "C" {

bisym_status bisym_eval(const char* expr, int deg_x, int deg_y, int hbar_min,
                        int hbar_max, bisym_series_t** out) {
    if (expr == nullptr || out == nullptr) return invalid("null argument");
    if (deg_x < 0 || deg_y < 0) return invalid("degree bounds must be >= 0");
    if (hbar_min > hbar_max) return invalid("the hbar window is empty");
    return guarded([&] {
        bisym::truncation tr(deg_x, deg_y, hbar_min, hbar_max);
        bisym::expr::node_ptr ast = bisym::expr::parse(expr);
        *out = new bisym_series{bisym::expr::evaluate(*ast, tr)};
    });
}

bisym_status bisym_series_render(const bisym_series_t* s, const char* basis,
                                 const char* format, char** out) {
    if (s == nullptr || basis == nullptr || format == nullptr || out == nullptr)
        return invalid("null argument");
    bool schur;
    if (std::strcmp(basis, "p") == 0) schur = false;
    else if (std::strcmp(basis, "schur") == 0) schur = true;
    else return invalid("basis must be \"p\" or \"schur\"");
    bool json;
    if (std::strcmp(format, "text") == 0) json = false;
    else if (std::strcmp(format, "json") == 0) json = true;
    else return invalid("format must be \"text\" or \"json\"");
    return guarded([&] {
        std::string text = schur ? (json ? bisym::series_to_json_schur(s->impl)
                                         : bisym::series_to_text_schur(s->impl))
                                 : (json ? bisym::series_to_json(s->impl)
                                         : bisym::series_to_text_p(s->impl));
        char* copy = dup_string(text);
        if (copy == nullptr) throw std::bad_alloc();
        *out = copy;
    });
}

bisym_status bisym_series_dropped(const bisym_series_t* s, int* out) {
    if (s == nullptr || out == nullptr) return invalid("null argument");
    *out = s->impl.dropped_keys() ? 1 : 0;
    return BISYM_OK;
}

void bisym_series_destroy(bisym_series_t* s) { delete s; }

bisym_status bisym_autfn(const char* variant, int d, int q_max, int p_max,
                         int threads, bisym_report_t** out) {
    if (variant == nullptr || out == nullptr) return invalid("null argument");
    bisym::bimodule_variant v;
    if (!bisym::variant_from_name(variant, v))
        return invalid("variant must be \"Q\", \"Qtilde\" or \"Qprime\"");
    if (d < 0) return invalid("d must be >= 0");
    if (q_max < 0 || p_max < 0) return invalid("weight bounds must be >= 0");
    if (threads < 0) return invalid("threads must be >= 0");
    return guarded([&] {
        *out = new bisym_report{bisym::decomposition_report_for(
            v, d, q_max, p_max, threads < 1 ? 1 : threads)};
    });
}

bisym_status bisym_report_render(const bisym_report_t* r, const char* format,
                                 char** out) {
    if (r == nullptr || format == nullptr || out == nullptr)
        return invalid("null argument");
    bool json;
    if (std::strcmp(format, "text") == 0) json = false;
    else if (std::strcmp(format, "json") == 0) json = true;
    else return invalid("format must be \"text\" or \"json\"");
    return guarded([&] {
        std::string text =
            json ? bisym::report_to_json(r->impl) : bisym::report_to_text(r->impl);
        char* copy = dup_string(text);
        if (copy == nullptr) throw std::bad_alloc();
        *out = copy;
    });
}

void bisym_report_destroy(bisym_report_t* r) { delete r; }

bisym_status bisym_counts(int d_max, int threads, const char* format,
                          char** out) {
    if (format == nullptr || out == nullptr) return invalid("null argument");
    if (d_max < 1) return invalid("d_max must be >= 1");
    if (threads < 0) return invalid("threads must be >= 0");
    bool json;
    if (std::strcmp(format, "text") == 0 || std::strcmp(format, "csv") == 0)
        json = false;
    else if (std::strcmp(format, "json") == 0) json = true;
    else return invalid("format must be \"text\", \"csv\" or \"json\"");
    return guarded([&] {
        std::vector<bisym::counts_row> rows =
            bisym::albanese_counts(d_max, threads < 1 ? 1 : threads);
        std::string text =
            json ? bisym::counts_to_json(rows) : bisym::counts_to_csv(rows);
        char* copy = dup_string(text);
        if (copy == nullptr) throw std::bad_alloc();
        *out = copy;
    });
}

void bisym_string_free(char* s) { std::free(s); }

const char* bisym_last_error(void) { return tl_last_error.c_str(); }

const char* bisym_status_message(bisym_status st) {
    switch (st) {
    case BISYM_OK: return "ok";
    case BISYM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BISYM_ERR_PARSE: return "parse error";
    case BISYM_ERR_DOMAIN: return "domain error";
    case BISYM_ERR_OVERFLOW: return "grading window overflow";
    case BISYM_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

} // extern "C"
