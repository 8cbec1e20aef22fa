#include "applications.hpp"

#include "error.hpp"

namespace bisym {

std::string_view variant_name(bimodule_variant v) {
    switch (v) {
    case bimodule_variant::full: return "Q";
    case bimodule_variant::subprop: return "Qtilde";
    case bimodule_variant::nonunital: return "Qprime";
    }
    throw error("variant_name: unknown variant");
}

bool variant_from_name(std::string_view name, bimodule_variant& out) {
    if (name == "Q") out = bimodule_variant::full;
    else if (name == "Qtilde") out = bimodule_variant::subprop;
    else if (name == "Qprime") out = bimodule_variant::nonunital;
    else return false;
    return true;
}

bisym_series ch_generator(bimodule_variant v, const truncation& tr) {
    bisym_series out(tr);
    partition one({1});
    for (int p = 1; p <= tr.deg_y; ++p) {
        for (const partition& mu : partitions_of_cached(p)) {
            rat c(1);
            c /= rat(static_cast<unsigned long>(z_of(mu)));
            // h_p(y) alone: variants full and nonunital.
            if (v != bimodule_variant::subprop) out.add_term(bikey{partition{}, mu}, 0, c);
            // h_p(y) h_1(x): full always, subprop always, nonunital for p >= 2.
            if (v != bimodule_variant::nonunital || p >= 2)
                out.add_term(bikey{one, mu}, 0, c);
        }
    }
    return out;
}

bisym_series ch_H(bimodule_variant v, const truncation& tr) {
    if (tr.t_min > 0)
        throw domain_error("ch_H: the t-window must contain 0 (the unit row)");
    bisym_series gen = ch_generator(v, tr);
    int diff_bound = tr.t_max;
    key_filter keep = [diff_bound](const bikey& k) {
        return k.yp.weight() - k.xp.weight() <= diff_bound;
    };
    bisym_series one_plus_sat = add(unit(tr), saturate(gen, keep));
    return omega_xy(psi_regrade(one_plus_sat));
}

namespace {

void require_genuine(const report_row& r, bimodule_variant v) {
    if (!is_integer(r.mult) || r.mult <= 0)
        throw error("pipeline produced a non-positive-integer multiplicity " +
                    rat_to_string(r.mult) + " at (" + r.xp.to_string() + " | " +
                    r.yp.to_string() + ", t=" + std::to_string(r.hbar_deg) +
                    ") for variant " + std::string(variant_name(v)));
}

void require_cell_vanishing(const report_row& r) {
    if (r.yp.weight() - r.xp.weight() != r.hbar_deg)
        throw error("regrading invariant violated: row (" + r.xp.to_string() + " | " +
                    r.yp.to_string() + ") at t=" + std::to_string(r.hbar_deg));
}

} // namespace

decomposition_report decomposition_report_for(bimodule_variant v, int d,
                                              int q_max, int p_max, int threads) {
    if (d < 0 || q_max < 0 || p_max < 0)
        throw domain_error("decomposition_report_for: bounds must be nonnegative");
    truncation tr(q_max, p_max, 0, d);
    decomposition_report all = schur_pair_expansion(ch_H(v, tr), threads);

    decomposition_report out;
    for (const report_row& r : all.rows) {
        require_cell_vanishing(r);
        if (r.hbar_deg != d) continue;
        require_genuine(r, v);
        out.rows.push_back(r);
    }
    return out;
}

std::vector<counts_row> albanese_counts(int d_max, int threads) {
    if (d_max < 1) throw domain_error("albanese_counts: d_max must be >= 1");
    truncation tr(d_max, 2 * d_max, 0, d_max);
    decomposition_report rep =
        schur_pair_expansion(ch_H(bimodule_variant::nonunital, tr), threads);

    std::vector<counts_row> out;
    out.reserve(static_cast<size_t>(d_max));
    for (int d = 1; d <= d_max; ++d) out.push_back(counts_row{d, 0, 0});
    for (const report_row& r : rep.rows) {
        require_cell_vanishing(r);
        if (r.hbar_deg < 1) continue; // the unit row
        require_genuine(r, bimodule_variant::nonunital);
        counts_row& c = out[static_cast<size_t>(r.hbar_deg - 1)];
        c.n_irr += 1;
        c.sum_mult += r.mult.get_num().get_si();
    }
    return out;
}

} // namespace bisym
