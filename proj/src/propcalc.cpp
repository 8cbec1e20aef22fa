#include "propcalc.hpp"

#include "error.hpp"

#include <map>
#include <vector>

namespace bisym {

bisym_series saturate(const bisym_series& f, const key_filter& keep) {
    return plethystic_exp(f, keep);
}

bisym_series regular_rep_char(int n, const truncation& tr) {
    if (n < 1) throw domain_error("regular_rep_char: n must be a positive integer");
    bisym_series out(tr);
    for (const partition& mu : partitions_of_cached(n)) {
        rat c(1);
        c /= rat(static_cast<unsigned long>(z_of(mu)));
        out.add_term(bikey{mu, mu}, 0, c);
    }
    return out;
}

bisym_series box(const bisym_series& f, const bisym_series& g) {
    bisym_series sf = saturate(f);
    bisym_series sg = saturate(g);

    truncation tw = f.trunc().meet(g.trunc());
    truncation tr(f.trunc().deg_x, g.trunc().deg_y, tw.t_min, tw.t_max);

    // Index each side by its inner partition.
    std::map<partition, std::vector<std::pair<const partition*, const tcoeff*>>> left, right;
    for (const auto& [k, c] : sf.terms())
        if (!k.yp.empty()) left[k.yp].emplace_back(&k.xp, &c);
    for (const auto& [k, c] : sg.terms())
        if (!k.xp.empty()) right[k.xp].emplace_back(&k.yp, &c);

    bisym_series out(tr);
    if (sf.dropped_keys() || sg.dropped_keys()) out.mark_dropped();
    for (const auto& [mu, ls] : left) {
        auto it = right.find(mu);
        if (it == right.end()) continue;
        rat z(static_cast<unsigned long>(z_of(mu)));
        for (const auto& [lam, a] : ls)
            for (const auto& [rho, b] : it->second) {
                if (!tr.contains_degrees(lam->weight(), rho->weight())) {
                    out.mark_dropped();
                    continue;
                }
                out.add_term(bikey{*lam, *rho}, (*a * *b).scaled(z));
            }
    }
    return out;
}

bisym_series connected_box(const bisym_series& f, const bisym_series& g) {
    return plethystic_log(box(f, g));
}

bisym_series psi_regrade(const bisym_series& f) {
    const truncation& tr = f.trunc();
    bisym_series out(tr);
    if (f.dropped_keys()) out.mark_dropped();
    for (const auto& [k, c] : f.terms()) {
        int shift = k.yp.weight() - k.xp.weight();
        tcoeff c2 = c.shifted(shift);
        if (c2.min_exp() < tr.t_min || c2.max_exp() > tr.t_max)
            throw window_error("psi_regrade: t-exponent " +
                               std::to_string(c2.min_exp() < tr.t_min ? c2.min_exp()
                                                                      : c2.max_exp()) +
                               " outside the window [" + std::to_string(tr.t_min) + ", " +
                               std::to_string(tr.t_max) + "]");
        out.add_term(k, c2);
    }
    return out;
}

rat bidim_from_char(const bisym_series& f, int m, int n, int texp) {
    if (m < 0 || n < 0) throw domain_error("bidim_from_char: negative bidegree");
    rat c = f.coeff(partition(std::vector<int>(static_cast<size_t>(m), 1)),
                    partition(std::vector<int>(static_cast<size_t>(n), 1)), texp);
    mpz_class scale = 1;
    for (int i = 2; i <= m; ++i) scale *= i;
    for (int i = 2; i <= n; ++i) scale *= i;
    return c * rat(scale);
}

} // namespace bisym
