#include "characters.hpp"

#include <vector>

namespace bisym {

sym_series ch_ucom(alphabet tag, const truncation& tr) {
    sym_series out(tag, tr);
    int deg = out.degree_bound();
    for (int n = 0; n <= deg; ++n)
        for (const partition& mu : partitions_of_cached(n))
            out.add_term(mu, 0, frac(1, 1) / rat(static_cast<unsigned long>(z_of(mu))));
    return out;
}

sym_series log_kernel(alphabet tag, const truncation& tr) {
    sym_series out(tag, tr);
    int deg = out.degree_bound();
    for (int k = 1; k <= deg; ++k) {
        int mu = mobius(k);
        if (mu == 0) continue;
        for (int j = 1; k * j <= deg; ++j)
            out.add_term(partition(std::vector<int>(static_cast<size_t>(j), k)), 0,
                         frac(j % 2 == 1 ? mu : -mu, static_cast<long>(k) * j));
    }
    return out;
}

sym_series ch_lie(alphabet tag, const truncation& tr) {
    sym_series out(tag, tr);
    int deg = out.degree_bound();
    for (int n = 1; n <= deg; ++n) {
        int mu = mobius(n);
        if (mu == 0) continue;
        for (int k = 1; n * k <= deg; ++k)
            out.add_term(partition(std::vector<int>(static_cast<size_t>(k), n)), 0,
                         frac(mu, static_cast<long>(n) * k));
    }
    return out;
}

// ch_lie_d is the image of ch_lie under the rules p_n -> (-1)^{(d-1)(n-1)}
// hbar^{(d-1)(n-1)} p_n up to an overall normalization; written out and
// converted through hbar = -t, the term at (n, k) is
//     (-1)^{k(d+1)(n+1)} * mu(n)/(nk) * t^{(d-1)(nk-1)} * p_{(n^k)}.
// The d = 1 anchor (all signs +, all t-exponents 0, i.e. ch_lie) and the
// d = 2 degree-2 anchor (t * h_2) pin the bookkeeping down in the tests.
sym_series ch_lie_d(int d, alphabet tag, const truncation& tr) {
    if (d < 1) throw domain_error("ch_lie_d: d must be >= 1");
    sym_series out(tag, tr);
    int deg = out.degree_bound();
    for (int n = 1; n <= deg; ++n) {
        int mu = mobius(n);
        if (mu == 0) continue;
        for (int k = 1; n * k <= deg; ++k) {
            int sign = (k * (d + 1) * (n + 1)) % 2 == 0 ? 1 : -1;
            out.add_term(partition(std::vector<int>(static_cast<size_t>(k), n)),
                         (d - 1) * (n * k - 1),
                         frac(sign * mu, static_cast<long>(n) * k));
        }
    }
    return out;
}

// Expanding (sum_k p_k/k) composed with ch_lie_d and regrouping by m = nk
// gives, per (m, n | m, k) and after hbar = -t,
//     (-1)^sigma * mu(n)/(mk) * t^{(d-1)(mk - m/n)} * p_{(m^k)},
//     sigma = d + k + 1 + dk + (d-1)mk + (d-1)(m/n)  (mod 2).
// At d = 1 the inner Moebius sums cancel everything except m = 1, leaving
// sum_k p_1^k/k, whose exponential is the geometric series in p_1.
sym_series log_ch_pois(int d, alphabet tag, const truncation& tr) {
    if (d < 1) throw domain_error("log_ch_pois: d must be >= 1");
    sym_series out(tag, tr);
    int deg = out.degree_bound();
    for (int m = 1; m <= deg; ++m)
        for (int n = 1; n <= m; ++n) {
            if (m % n != 0) continue;
            int mu = mobius(n);
            if (mu == 0) continue;
            for (int k = 1; m * k <= deg; ++k) {
                int sigma = d + k + 1 + d * k + (d - 1) * m * k + (d - 1) * (m / n);
                int sign = sigma % 2 == 0 ? 1 : -1;
                out.add_term(partition(std::vector<int>(static_cast<size_t>(k), m)),
                             (d - 1) * (m * k - m / n),
                             frac(sign * mu, static_cast<long>(m) * k));
            }
        }
    return out;
}

} // namespace bisym
