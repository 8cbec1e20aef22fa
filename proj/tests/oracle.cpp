#include "oracle.hpp"

#include "error.hpp"

namespace bisym::oracle {

namespace {

void check_shape(const poly& a, const poly& b) {
    if (a.r != b.r || a.s != b.s)
        throw domain_error("oracle: mixed variable counts");
}

// One list entry: a monomial value z = x^alpha y^beta t^k with multiplicity.
struct listed_monomial {
    std::vector<int> exps;
    long multiplicity;
};

std::vector<listed_monomial> value_list(const poly& g) {
    std::vector<listed_monomial> out;
    for (const auto& [exps, c] : g.terms) {
        if (c < 0 || c.get_den() != 1)
            throw domain_error(
                "oracle: monomial multiplicities must be nonnegative integers");
        if (c == 0) continue;
        out.push_back({exps, c.get_num().get_si()});
    }
    return out;
}

// p_n evaluated on a value list: sum of m * z^n over the entries.
poly power_sum_on_list(const std::vector<listed_monomial>& zs, int n, int r, int s) {
    poly out = zero_poly(r, s);
    for (const listed_monomial& z : zs) {
        std::vector<int> e = z.exps;
        for (int& v : e) v *= n;
        out.terms[e] += rat(z.multiplicity);
    }
    std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
    return out;
}

poly from_tcoeff(const tcoeff& c, int r, int s) {
    poly out = zero_poly(r, s);
    for (const auto& [k, v] : c.terms()) {
        std::vector<int> e(static_cast<size_t>(r + s) + 1, 0);
        e.back() = k;
        out.terms[e] = v;
    }
    return out;
}

// x block at offset 0, y block at offset r.
poly block_power_sum(int r, int s, int offset, int count, int n) {
    poly out = zero_poly(r, s);
    for (int i = 0; i < count; ++i) {
        std::vector<int> e(static_cast<size_t>(r + s) + 1, 0);
        e[static_cast<size_t>(offset + i)] = n;
        out.terms[e] = 1;
    }
    return out;
}

poly expand_term(const partition& xp, const partition& yp, const tcoeff& c,
                 int r, int s) {
    poly acc = from_tcoeff(c, r, s);
    for (int a : xp.parts()) acc = mul(acc, block_power_sum(r, s, 0, r, a));
    for (int b : yp.parts()) acc = mul(acc, block_power_sum(r, s, r, s, b));
    return acc;
}

// Expand a one-alphabet series into a chosen block, ignoring its tag.
poly expand_in_block(const sym_series& f, int r, int s, int offset, int count) {
    poly out = zero_poly(r, s);
    for (const auto& [lam, c] : f.terms()) {
        poly acc = from_tcoeff(c, r, s);
        for (int a : lam.parts())
            acc = mul(acc, block_power_sum(r, s, offset, count, a));
        out = add(out, acc);
    }
    return out;
}

} // namespace

poly zero_poly(int r, int s) { return poly{r, s, {}}; }

poly const_poly(int r, int s, const rat& c) {
    poly out = zero_poly(r, s);
    if (c != 0) out.terms[std::vector<int>(static_cast<size_t>(r + s) + 1, 0)] = c;
    return out;
}

poly add(const poly& a, const poly& b) {
    check_shape(a, b);
    poly out = a;
    for (const auto& [e, c] : b.terms) {
        rat& slot = out.terms[e];
        slot += c;
        if (slot == 0) out.terms.erase(e);
    }
    return out;
}

poly sub(const poly& a, const poly& b) {
    check_shape(a, b);
    poly out = a;
    for (const auto& [e, c] : b.terms) {
        rat& slot = out.terms[e];
        slot -= c;
        if (slot == 0) out.terms.erase(e);
    }
    return out;
}

poly mul(const poly& a, const poly& b) {
    check_shape(a, b);
    poly out = zero_poly(a.r, a.s);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            std::vector<int> e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            rat& slot = out.terms[e];
            slot += ca * cb;
            if (slot == 0) out.terms.erase(e);
        }
    return out;
}

poly eval_finite(const bisym_series& f, int r, int s) {
    poly out = zero_poly(r, s);
    for (const auto& [key, c] : f.terms())
        out = add(out, expand_term(key.xp, key.yp, c, r, s));
    return out;
}

poly eval_finite(const sym_series& f, int r, int s) {
    poly out = zero_poly(r, s);
    for (const auto& [lam, c] : f.terms()) {
        if (f.tag() == alphabet::x)
            out = add(out, expand_term(lam, partition{}, c, r, s));
        else
            out = add(out, expand_term(partition{}, lam, c, r, s));
    }
    return out;
}

poly pleth_by_substitution(const sym_series& f, const sym_series& g, int r) {
    std::vector<listed_monomial> zs = value_list(expand_in_block(g, r, 0, 0, r));
    poly out = zero_poly(r, 0);
    for (const auto& [lam, c] : f.terms()) {
        poly acc = from_tcoeff(c, r, 0);
        for (int a : lam.parts()) acc = mul(acc, power_sum_on_list(zs, a, r, 0));
        out = add(out, acc);
    }
    return out;
}

poly relpleth_by_substitution(const bisym_series& fbar, const bisym_series& gbar,
                              const sym_series& g, int r, int s) {
    std::vector<listed_monomial> zs = value_list(eval_finite(gbar, r, s));
    std::vector<listed_monomial> ws = value_list(expand_in_block(g, r, s, r, s));
    poly out = zero_poly(r, s);
    for (const auto& [key, c] : fbar.terms()) {
        poly acc = from_tcoeff(c, r, s);
        for (int a : key.xp.parts()) acc = mul(acc, power_sum_on_list(zs, a, r, s));
        for (int b : key.yp.parts()) acc = mul(acc, power_sum_on_list(ws, b, r, s));
        out = add(out, acc);
    }
    return out;
}

} // namespace bisym::oracle
