#include "plethysm.hpp"

#include "error.hpp"

#include <map>

namespace bisym {

sym_series adams(const sym_series& f, int n) {
    if (n < 1) throw domain_error("adams: n must be a positive integer");
    sym_series out(f.tag(), f.trunc());
    const int bound = out.degree_bound();
    bool dropped = f.dropped_keys();
    for (const auto& [lam, c] : f.terms()) {
        if (lam.weight() * n > bound) {
            dropped = true;
            continue;
        }
        tcoeff c2 = c.stretched(n).windowed(f.trunc().t_min, f.trunc().t_max, &dropped);
        if (!c2.is_zero()) out.add_term(lam.stretched(n), c2);
    }
    if (dropped) out.mark_dropped();
    return out;
}

bisym_series adams(const bisym_series& f, int n) {
    if (n < 1) throw domain_error("adams: n must be a positive integer");
    const truncation& tr = f.trunc();
    bisym_series out(tr);
    bool dropped = f.dropped_keys();
    for (const auto& [k, c] : f.terms()) {
        if (!tr.contains_degrees(k.xp.weight() * n, k.yp.weight() * n)) {
            dropped = true;
            continue;
        }
        bool cut = false;
        tcoeff c2 = c.stretched(n).windowed(tr.t_min, tr.t_max, &cut);
        dropped |= cut;
        if (!c2.is_zero())
            out.add_term(bikey{k.xp.stretched(n), k.yp.stretched(n)}, c2);
    }
    if (dropped) out.mark_dropped();
    return out;
}

namespace {

// Per-call cache of adams images, keyed by stretch factor.
template <class Series>
class adams_cache {
public:
    explicit adams_cache(const Series& base) : base_(base) {}
    const Series& operator()(int n) {
        auto it = imgs_.find(n);
        if (it == imgs_.end()) it = imgs_.emplace(n, adams(base_, n)).first;
        return it->second;
    }

private:
    const Series& base_;
    std::map<int, Series> imgs_;
};

} // namespace

sym_series pleth(const sym_series& f, const sym_series& g) {
    if (!vanishes_at_origin(g))
        throw domain_error("pleth: substituted argument must vanish at the origin");
    sym_series out(g.tag(), g.trunc());
    if (f.dropped_keys()) out.mark_dropped();
    adams_cache img(g);
    for (const auto& [lam, c] : f.terms()) {
        sym_series acc(g.tag(), g.trunc());
        acc.add_term(partition{}, 0, 1);
        for (int part : lam.parts()) {
            acc = mul(acc, img(part));
            if (acc.is_zero()) break;
        }
        if (acc.is_zero()) {
            if (acc.dropped_keys()) out.mark_dropped();
            continue;
        }
        out = add(out, scale(acc, c));
    }
    return out;
}

namespace {

// adams(g, n) read in the y alphabet and homed to `tr`, whatever g's tag.
bisym_series adams_into_y(const sym_series& g, int n, const truncation& tr) {
    bisym_series out(tr);
    bool dropped = g.dropped_keys();
    for (const auto& [mu, c] : g.terms()) {
        if (mu.weight() * n > tr.deg_y) {
            dropped = true;
            continue;
        }
        tcoeff c2 = c.stretched(n).windowed(tr.t_min, tr.t_max, &dropped);
        if (!c2.is_zero()) out.add_term(bikey{partition{}, mu.stretched(n)}, c2);
    }
    if (dropped) out.mark_dropped();
    return out;
}

} // namespace

bisym_series relpleth(const bisym_series& f, const bisym_series& gbar,
                      const sym_series& g) {
    if (!vanishes_at_origin(gbar) || !vanishes_at_origin(g))
        throw domain_error("relpleth: substituted arguments must vanish at the origin");
    const truncation& tr = gbar.trunc();
    adams_cache ximg(gbar);
    std::map<int, bisym_series> yimgs;
    auto yimg = [&](int n) -> const bisym_series& {
        auto it = yimgs.find(n);
        if (it == yimgs.end()) it = yimgs.emplace(n, adams_into_y(g, n, tr)).first;
        return it->second;
    };

    bisym_series out(tr);
    if (f.dropped_keys()) out.mark_dropped();
    for (const auto& [k, c] : f.terms()) {
        bisym_series acc = unit(tr);
        for (int part : k.xp.parts()) {
            acc = mul(acc, ximg(part));
            if (acc.is_zero()) break;
        }
        if (!acc.is_zero())
            for (int part : k.yp.parts()) {
                acc = mul(acc, yimg(part));
                if (acc.is_zero()) break;
            }
        if (acc.is_zero()) {
            if (acc.dropped_keys()) out.mark_dropped();
            continue;
        }
        out = add(out, scale(acc, c));
    }
    return out;
}

bisym_series swap_alphabets(const bisym_series& f) {
    truncation tr = f.trunc();
    std::swap(tr.deg_x, tr.deg_y);
    bisym_series out(tr);
    if (f.dropped_keys()) out.mark_dropped();
    for (const auto& [k, c] : f.terms()) out.add_term(bikey{k.yp, k.xp}, c);
    return out;
}

bisym_series koike_pleth(const bisym_series& f, const bisym_series& gbar) {
    if (!vanishes_at_origin(gbar))
        throw domain_error("koike_pleth: substituted argument must vanish at the origin");
    const truncation& tr = gbar.trunc();
    bisym_series sw = rehome(swap_alphabets(gbar), tr);
    adams_cache ximg(gbar);
    adams_cache yimg(sw);

    bisym_series out(tr);
    if (f.dropped_keys()) out.mark_dropped();
    for (const auto& [k, c] : f.terms()) {
        bisym_series acc = unit(tr);
        for (int part : k.xp.parts()) {
            acc = mul(acc, ximg(part));
            if (acc.is_zero()) break;
        }
        if (!acc.is_zero())
            for (int part : k.yp.parts()) {
                acc = mul(acc, yimg(part));
                if (acc.is_zero()) break;
            }
        if (acc.is_zero()) {
            if (acc.dropped_keys()) out.mark_dropped();
            continue;
        }
        out = add(out, scale(acc, c));
    }
    return out;
}

bisym_series plethystic_exp(const bisym_series& f, const key_filter& keep) {
    if (!vanishes_at_origin(f))
        throw domain_error("plethystic_exp: argument must vanish at the origin");
    const truncation& tr = f.trunc();
    const int n_max = std::max({tr.deg_x, tr.deg_y, tr.t_max, 0});
    bisym_series sum(tr);
    for (int n = 1; n <= n_max; ++n) {
        bisym_series a = adams(f, n);
        if (a.is_zero()) {
            if (a.dropped_keys()) sum.mark_dropped();
            continue;
        }
        sum = add(sum, scale(a, frac(1, n)));
    }
    return exp1(sum, keep);
}

bisym_series plethystic_log(const bisym_series& f) {
    if (!vanishes_at_origin(f))
        throw domain_error("plethystic_log: argument must vanish at the origin");
    const truncation& tr = f.trunc();
    const int n_max = std::max({tr.deg_x, tr.deg_y, tr.t_max, 0});
    bisym_series out(tr);
    for (int k = 1; k <= n_max; ++k) {
        int m = mobius(k);
        if (m == 0) continue;
        bisym_series a = adams(f, k);
        if (a.is_zero()) {
            if (a.dropped_keys()) out.mark_dropped();
            continue;
        }
        out = add(out, scale(log1(a), frac(m, k)));
    }
    return out;
}

sym_series omega(const sym_series& f) {
    sym_series out(f.tag(), f.trunc());
    if (f.dropped_keys()) out.mark_dropped();
    for (const auto& [lam, c] : f.terms())
        out.add_term(lam, class_sign(lam) == 1 ? c : c.scaled(rat(-1)));
    return out;
}

namespace {

bisym_series signed_by(const bisym_series& f, int (*sign)(const bikey&)) {
    bisym_series out(f.trunc());
    if (f.dropped_keys()) out.mark_dropped();
    for (const auto& [k, c] : f.terms())
        out.add_term(k, sign(k) == 1 ? c : c.scaled(rat(-1)));
    return out;
}

} // namespace

bisym_series omega_x(const bisym_series& f) {
    return signed_by(f, [](const bikey& k) { return class_sign(k.xp); });
}

bisym_series omega_y(const bisym_series& f) {
    return signed_by(f, [](const bikey& k) { return class_sign(k.yp); });
}

bisym_series omega_xy(const bisym_series& f) {
    return signed_by(f, [](const bikey& k) { return class_sign(k.xp) * class_sign(k.yp); });
}

} // namespace bisym
