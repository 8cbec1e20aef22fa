#include "series.hpp"

#include <algorithm>

namespace bisym {

// ---------------------------------------------------------------------------
// tcoeff

tcoeff tcoeff::term(int exp, rat value) {
    tcoeff t;
    if (value != 0) t.c_.emplace(exp, std::move(value));
    return t;
}

rat tcoeff::at(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? rat(0) : it->second;
}

int tcoeff::min_exp() const {
    if (c_.empty()) throw domain_error("min_exp of zero");
    return c_.begin()->first;
}

int tcoeff::max_exp() const {
    if (c_.empty()) throw domain_error("max_exp of zero");
    return c_.rbegin()->first;
}

void tcoeff::add_term(int exp, const rat& value) {
    if (value == 0) return;
    auto [it, inserted] = c_.emplace(exp, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) c_.erase(it);
    }
}

tcoeff& tcoeff::operator+=(const tcoeff& o) {
    for (const auto& [e, v] : o.c_) add_term(e, v);
    return *this;
}

tcoeff& tcoeff::operator-=(const tcoeff& o) {
    for (const auto& [e, v] : o.c_) add_term(e, -v);
    return *this;
}

tcoeff operator*(const tcoeff& a, const tcoeff& b) {
    tcoeff out;
    for (const auto& [ea, va] : a.c_)
        for (const auto& [eb, vb] : b.c_)
            out.add_term(ea + eb, va * vb);
    return out;
}

tcoeff tcoeff::scaled(const rat& v) const {
    tcoeff out;
    if (v == 0) return out;
    for (const auto& [e, c] : c_) out.c_.emplace(e, c * v);
    return out;
}

tcoeff tcoeff::shifted(int dexp) const {
    tcoeff out;
    for (const auto& [e, c] : c_) out.c_.emplace(e + dexp, c);
    return out;
}

tcoeff tcoeff::stretched(int n) const {
    tcoeff out;
    for (const auto& [e, c] : c_) out.c_.emplace(e * n, c);
    return out;
}

tcoeff tcoeff::windowed(int lo, int hi, bool* dropped) const {
    tcoeff out;
    for (const auto& [e, c] : c_) {
        if (e < lo || e > hi) {
            if (dropped) *dropped = true;
            continue;
        }
        out.c_.emplace(e, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// truncation

truncation::truncation(int dx, int dy, int tmin, int tmax)
    : deg_x(dx), deg_y(dy), t_min(tmin), t_max(tmax) {
    if (dx < 0 || dy < 0) throw domain_error("truncation degrees must be nonnegative");
    if (tmin > tmax) throw domain_error("truncation t-window is empty");
}

truncation truncation::meet(const truncation& o) const {
    return truncation(std::min(deg_x, o.deg_x), std::min(deg_y, o.deg_y),
                      std::max(t_min, o.t_min), std::min(t_max, o.t_max));
}

// ---------------------------------------------------------------------------
// sym_series

void sym_series::add_term(const partition& lam, int texp, const rat& c) {
    if (c == 0) return;
    if (lam.weight() > degree_bound() || texp < tr_.t_min || texp > tr_.t_max) {
        dropped_ = true;
        return;
    }
    auto it = terms_.find(lam);
    if (it == terms_.end()) it = terms_.emplace(lam, tcoeff()).first;
    it->second.add_term(texp, c);
    if (it->second.is_zero()) terms_.erase(it);
}

void sym_series::add_term(const partition& lam, const tcoeff& c) {
    for (const auto& [e, v] : c.terms()) add_term(lam, e, v);
}

rat sym_series::coeff(const partition& lam, int texp) const {
    if (lam.weight() > degree_bound() || texp < tr_.t_min || texp > tr_.t_max)
        throw domain_error("coefficient read outside the truncation");
    auto it = terms_.find(lam);
    return it == terms_.end() ? rat(0) : it->second.at(texp);
}

sym_series add(const sym_series& a, const sym_series& b) {
    if (a.tag() != b.tag()) throw domain_error("cannot add series in different alphabets");
    sym_series out(a.tag(), a.trunc().meet(b.trunc()));
    if (a.dropped_keys() || b.dropped_keys()) out.mark_dropped();
    for (const auto& [k, c] : a.terms()) out.add_term(k, c);
    for (const auto& [k, c] : b.terms()) out.add_term(k, c);
    return out;
}

sym_series sub(const sym_series& a, const sym_series& b) {
    return add(a, scale(b, rat(-1)));
}

sym_series mul(const sym_series& a, const sym_series& b) {
    if (a.tag() != b.tag()) throw domain_error("cannot multiply series in different alphabets");
    sym_series out(a.tag(), a.trunc().meet(b.trunc()));
    if (a.dropped_keys() || b.dropped_keys()) out.mark_dropped();
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            partition k = ka.merged(kb);
            if (k.weight() > out.degree_bound()) {
                out.mark_dropped();
                continue;
            }
            out.add_term(k, ca * cb);
        }
    return out;
}

sym_series scale(const sym_series& a, const rat& v) {
    sym_series out(a.tag(), a.trunc());
    if (a.dropped_keys()) out.mark_dropped();
    if (v == 0) return out;
    for (const auto& [k, c] : a.terms()) out.add_term(k, c.scaled(v));
    return out;
}

sym_series scale(const sym_series& a, const tcoeff& v) {
    sym_series out(a.tag(), a.trunc());
    if (a.dropped_keys()) out.mark_dropped();
    for (const auto& [k, c] : a.terms()) out.add_term(k, c * v);
    return out;
}

sym_series p_basis(alphabet tag, int n, const truncation& tr) {
    if (n < 1) throw domain_error("p_n needs n >= 1");
    sym_series out(tag, tr);
    out.add_term(partition({n}), 0, 1);
    return out;
}

sym_series retag(const sym_series& a, alphabet tag) {
    sym_series out(tag, a.trunc());
    if (a.dropped_keys()) out.mark_dropped();
    for (const auto& [k, c] : a.terms()) out.add_term(k, c);
    return out;
}

// ---------------------------------------------------------------------------
// bisym_series

void bisym_series::add_term(const bikey& k, int texp, const rat& c) {
    if (c == 0) return;
    if (!tr_.contains(k.xp.weight(), k.yp.weight(), texp)) {
        dropped_ = true;
        return;
    }
    auto it = terms_.find(k);
    if (it == terms_.end()) it = terms_.emplace(k, tcoeff()).first;
    it->second.add_term(texp, c);
    if (it->second.is_zero()) terms_.erase(it);
}

void bisym_series::add_term(const bikey& k, const tcoeff& c) {
    for (const auto& [e, v] : c.terms()) add_term(k, e, v);
}

void bisym_series::set_term(const bikey& k, tcoeff c) {
    if (!tr_.contains_degrees(k.xp.weight(), k.yp.weight())) {
        if (!c.is_zero()) dropped_ = true;
        return;
    }
    bool cut = false;
    c = c.windowed(tr_.t_min, tr_.t_max, &cut);
    if (cut) dropped_ = true;
    if (c.is_zero()) {
        terms_.erase(k);
        return;
    }
    terms_[k] = std::move(c);
}

rat bisym_series::coeff(const partition& lam, const partition& mu, int texp) const {
    if (!tr_.contains(lam.weight(), mu.weight(), texp))
        throw domain_error("coefficient read outside the truncation");
    auto it = terms_.find(bikey{lam, mu});
    return it == terms_.end() ? rat(0) : it->second.at(texp);
}

const tcoeff* bisym_series::find(const bikey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? nullptr : &it->second;
}

bisym_series add(const bisym_series& a, const bisym_series& b) {
    bisym_series out(a.trunc().meet(b.trunc()));
    if (a.dropped_keys() || b.dropped_keys()) out.mark_dropped();
    for (const auto& [k, c] : a.terms()) out.add_term(k, c);
    for (const auto& [k, c] : b.terms()) out.add_term(k, c);
    return out;
}

bisym_series sub(const bisym_series& a, const bisym_series& b) {
    return add(a, scale(b, rat(-1)));
}

bisym_series neg(const bisym_series& a) { return scale(a, rat(-1)); }

bisym_series mul(const bisym_series& a, const bisym_series& b) {
    bisym_series out(a.trunc().meet(b.trunc()));
    if (a.dropped_keys() || b.dropped_keys()) out.mark_dropped();
    const truncation& tr = out.trunc();
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            int wx = ka.xp.weight() + kb.xp.weight();
            int wy = ka.yp.weight() + kb.yp.weight();
            if (!tr.contains_degrees(wx, wy)) {
                out.mark_dropped();
                continue;
            }
            out.add_term(bikey{ka.xp.merged(kb.xp), ka.yp.merged(kb.yp)}, ca * cb);
        }
    return out;
}

bisym_series scale(const bisym_series& a, const rat& v) {
    bisym_series out(a.trunc());
    if (a.dropped_keys()) out.mark_dropped();
    if (v == 0) return out;
    for (const auto& [k, c] : a.terms()) out.add_term(k, c.scaled(v));
    return out;
}

bisym_series scale(const bisym_series& a, const tcoeff& v) {
    bisym_series out(a.trunc());
    if (a.dropped_keys()) out.mark_dropped();
    for (const auto& [k, c] : a.terms()) out.add_term(k, c * v);
    return out;
}

bisym_series unit(const truncation& tr) {
    bisym_series out(tr);
    out.add_term(bikey{}, 0, 1);
    return out;
}

bisym_series embed(const sym_series& f) {
    bisym_series out(f.trunc());
    if (f.dropped_keys()) out.mark_dropped();
    for (const auto& [lam, c] : f.terms()) {
        bikey k = (f.tag() == alphabet::x) ? bikey{lam, partition()} : bikey{partition(), lam};
        out.add_term(k, c);
    }
    return out;
}

bool vanishes_at_origin(const bisym_series& f) {
    const tcoeff* c = f.find(bikey{});
    return c == nullptr || c->min_exp() >= 1;
}

bool vanishes_at_origin(const sym_series& f) {
    auto it = f.terms().find(partition());
    return it == f.terms().end() || it->second.min_exp() >= 1;
}

bisym_series rehome(const bisym_series& f, const truncation& to) {
    bisym_series out(to);
    if (f.dropped_keys()) out.mark_dropped();
    for (const auto& [k, c] : f.terms()) out.add_term(k, c);
    return out;
}

// ---------------------------------------------------------------------------
// exp / log on the total-degree grading

namespace {

using component = std::map<bikey, tcoeff>;

// exp of a pure-t element with positive valuation, inside [.., t_max].
tcoeff exp_tcoeff(const tcoeff& u0, int t_min, int t_max, bool& cut) {
    tcoeff out = tcoeff::one();
    tcoeff pw = tcoeff::one();
    rat fact(1);
    for (int j = 1; !pw.is_zero() && j <= t_max + 1; ++j) {
        pw = (pw * u0).windowed(t_min, t_max, &cut);
        fact *= j;
        out += pw.scaled(1 / fact);
    }
    return out;
}

} // namespace

bisym_series exp1(const bisym_series& f, const key_filter& keep) {
    if (!vanishes_at_origin(f))
        throw domain_error("exp1: argument must vanish at the origin "
                           "(its constant term may live only in t-degree >= 1)");
    const truncation& tr = f.trunc();
    const int dmax = tr.deg_x + tr.deg_y;

    // Split off the degree-(0,0) layer; it commutes with everything and is
    // handled by a scalar exponential at the end.
    tcoeff u0;
    std::vector<component> u(static_cast<size_t>(dmax) + 1);
    for (const auto& [k, c] : f.terms()) {
        int d = k.xp.weight() + k.yp.weight();
        if (d == 0)
            u0 = c;
        else if (!keep || keep(k))
            u[static_cast<size_t>(d)].emplace(k, c);
    }

    // D * E_D = sum_{k=1}^{D} (k u_k) E_{D-k},  E_0 = 1.
    bool cut = f.dropped_keys();
    std::vector<component> E(static_cast<size_t>(dmax) + 1);
    E[0].emplace(bikey{}, tcoeff::one());
    for (int D = 1; D <= dmax; ++D) {
        component acc;
        for (int k = 1; k <= D; ++k) {
            const component& uk = u[static_cast<size_t>(k)];
            if (uk.empty()) continue;
            const component& e = E[static_cast<size_t>(D - k)];
            for (const auto& [ku, cu] : uk) {
                tcoeff cuk = cu.scaled(k);
                for (const auto& [ke, ce] : e) {
                    int wx = ku.xp.weight() + ke.xp.weight();
                    int wy = ku.yp.weight() + ke.yp.weight();
                    if (!tr.contains_degrees(wx, wy)) {
                        cut = true;
                        continue;
                    }
                    bikey k2{ku.xp.merged(ke.xp), ku.yp.merged(ke.yp)};
                    if (keep && !keep(k2)) continue; // deliberate quotient, not a cut
                    tcoeff prod = (cuk * ce).windowed(tr.t_min, tr.t_max, &cut);
                    if (prod.is_zero()) continue;
                    auto [it, inserted] = acc.emplace(k2, prod);
                    if (!inserted) it->second += prod;
                }
            }
        }
        component& eD = E[static_cast<size_t>(D)];
        rat inv = frac(1, D);
        for (auto& [k, c] : acc) {
            tcoeff v = c.scaled(inv);
            if (!v.is_zero()) eD.emplace(k, std::move(v));
        }
    }

    tcoeff e0 = exp_tcoeff(u0, tr.t_min, tr.t_max, cut);
    bisym_series out(tr);
    if (cut) out.mark_dropped();
    // exp(f) = e0 * (1 + sum_D E_D); subtract the constant 1.
    tcoeff head = e0;
    head.add_term(0, -1);
    out.add_term(bikey{}, head);
    for (int D = 1; D <= dmax; ++D)
        for (const auto& [k, c] : E[static_cast<size_t>(D)])
            out.add_term(k, c * e0);
    return out;
}

bisym_series log1(const bisym_series& f) {
    if (!vanishes_at_origin(f))
        throw domain_error("log1: argument must vanish at the origin "
                           "(its constant term may live only in t-degree >= 1)");
    const truncation& tr = f.trunc();
    // Every power either raises total degree (capped by deg_x + deg_y) or
    // raises the t-exponent of the degree-0 layer (capped by t_max), so the
    // iteration below empties out after finitely many steps; the cap is a
    // defensive bound on the same argument.
    const int neg = std::max(0, -tr.t_min);
    const int jcap = (tr.deg_x + tr.deg_y) * (1 + neg) + std::max(0, tr.t_max) + 2;

    bisym_series out(tr);
    bisym_series pw = f;
    for (int j = 1; !pw.is_zero(); ++j) {
        if (j > jcap) throw error("log1: power iteration failed to terminate");
        rat c = frac(j % 2 == 1 ? 1 : -1, j);
        out = add(out, scale(pw, c));
        pw = mul(pw, f);
    }
    // The final power may have been cut down to zero; keep its record.
    if (pw.dropped_keys()) out.mark_dropped();
    return out;
}

} // namespace bisym
