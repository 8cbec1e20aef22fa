#include "serialize.hpp"

#include <json.hpp>

#include <sstream>

namespace bisym {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json partition_to_json(const partition& p) {
    ordered_json arr = ordered_json::array();
    for (int part : p.parts()) arr.push_back(part);
    return arr;
}

ordered_json trunc_to_json(const truncation& tr) {
    ordered_json j;
    j["deg_x"] = tr.deg_x;
    j["deg_y"] = tr.deg_y;
    j["t_min"] = tr.t_min;
    j["t_max"] = tr.t_max;
    return j;
}

// One multiplicative factor list for a term; empty means the constant 1.
void append_p_factors(std::vector<std::string>& factors, const partition& p,
                      char alpha) {
    const auto& parts = p.parts();
    for (size_t i = 0; i < parts.size();) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        std::string f = "p[" + std::to_string(parts[i]) + "](" + alpha + ")";
        if (j - i > 1) f += "^" + std::to_string(j - i);
        factors.push_back(std::move(f));
        i = j;
    }
}

std::string join_term(bool& first, const rat& hbar_coeff, int texp,
                      std::vector<std::string> factors) {
    std::string out;
    bool negative = hbar_coeff < 0;
    rat mag = abs(hbar_coeff);
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;

    std::vector<std::string> all;
    if (mag != 1) all.push_back(rat_to_string(mag));
    if (texp == 1) all.push_back("hbar");
    else if (texp != 0) all.push_back("hbar^" + std::to_string(texp));
    for (auto& f : factors) all.push_back(std::move(f));
    if (all.empty()) all.push_back("1");

    for (size_t i = 0; i < all.size(); ++i) {
        if (i) out += "*";
        out += all[i];
    }
    return out;
}

rat hbar_coeff_of(const rat& tc, int texp) {
    // t = -hbar: c * t^k = c * (-1)^k * hbar^k.
    return (texp % 2 == 0) ? tc : rat(-tc);
}

} // namespace

std::string series_to_json(const bisym_series& f) {
    ordered_json j;
    j["terms"] = ordered_json::array();
    for (const auto& [k, c] : f.terms())
        for (const auto& [texp, v] : c.terms()) {
            ordered_json t;
            t["x"] = partition_to_json(k.xp);
            t["y"] = partition_to_json(k.yp);
            t["t"] = texp;
            t["c"] = rat_to_string(v);
            j["terms"].push_back(std::move(t));
        }
    j["trunc"] = trunc_to_json(f.trunc());
    return j.dump(2);
}

std::string series_to_text_p(const bisym_series& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : f.terms())
        for (const auto& [texp, v] : c.terms()) {
            std::vector<std::string> factors;
            append_p_factors(factors, k.xp, 'x');
            append_p_factors(factors, k.yp, 'y');
            out += join_term(first, hbar_coeff_of(v, texp), texp, std::move(factors));
        }
    return out;
}

namespace {

void append_s_factor(std::vector<std::string>& factors, const partition& p, char alpha) {
    if (p.empty()) return;
    std::string f = "s[";
    const auto& parts = p.parts();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) f += ",";
        f += std::to_string(parts[i]);
    }
    f += "](";
    f += alpha;
    f += ")";
    factors.push_back(std::move(f));
}

} // namespace

std::string series_to_text_schur(const bisym_series& f) {
    decomposition_report rep = schur_pair_expansion(f);
    if (rep.rows.empty()) return "0";
    std::string out;
    bool first = true;
    for (const report_row& r : rep.rows) {
        std::vector<std::string> factors;
        append_s_factor(factors, r.xp, 'x');
        append_s_factor(factors, r.yp, 'y');
        out += join_term(first, hbar_coeff_of(r.mult, r.hbar_deg), r.hbar_deg,
                         std::move(factors));
    }
    return out;
}

namespace {

ordered_json report_rows_json(const decomposition_report& r) {
    ordered_json rows = ordered_json::array();
    for (const report_row& row : r.rows) {
        ordered_json j;
        j["x_part"] = partition_to_json(row.xp);
        j["y_part"] = partition_to_json(row.yp);
        j["hbar_deg"] = row.hbar_deg;
        j["mult"] = rat_to_string(row.mult);
        rows.push_back(std::move(j));
    }
    return rows;
}

} // namespace

std::string series_to_json_schur(const bisym_series& f) {
    decomposition_report rep = schur_pair_expansion(f);
    ordered_json j;
    j["rows"] = report_rows_json(rep);
    j["all_integer"] = rep.all_integer;
    j["trunc"] = trunc_to_json(f.trunc());
    return j.dump(2);
}

std::string report_to_json(const decomposition_report& r) {
    ordered_json j;
    j["rows"] = report_rows_json(r);
    j["all_integer"] = r.all_integer;
    return j.dump(2);
}

std::string report_to_text(const decomposition_report& r) {
    std::string out = "x_part\ty_part\thbar_deg\tmult\n";
    for (const report_row& row : r.rows) {
        out += row.xp.to_string();
        out += '\t';
        out += row.yp.to_string();
        out += '\t';
        out += std::to_string(row.hbar_deg);
        out += '\t';
        out += rat_to_string(row.mult);
        out += '\n';
    }
    return out;
}

std::string counts_to_csv(const std::vector<counts_row>& rows) {
    std::string out = "d,n_irr,sum_mult\n";
    for (const counts_row& r : rows) {
        out += std::to_string(r.d);
        out += ',';
        out += std::to_string(r.n_irr);
        out += ',';
        out += std::to_string(r.sum_mult);
        out += '\n';
    }
    return out;
}

std::string counts_to_json(const std::vector<counts_row>& rows) {
    ordered_json arr = ordered_json::array();
    for (const counts_row& r : rows) {
        ordered_json j;
        j["d"] = r.d;
        j["n_irr"] = r.n_irr;
        j["sum_mult"] = r.sum_mult;
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

} // namespace bisym
