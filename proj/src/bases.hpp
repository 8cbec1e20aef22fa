#pragma once

#include "partition.hpp"
#include "series.hpp"

#include <cstdint>
#include <vector>

namespace bisym {

// Irreducible symmetric-group character chi^lam evaluated on the class of
// cycle type mu.  Murnaghan-Nakayama ribbon recursion, memoized behind a
// shared cache (concurrent reads, synchronized inserts).  Throws when the
// weights differ.
std::int64_t char_value(const partition& lam, const partition& mu);

// The full character table of S_n: chi[i][j] = chi^{parts[i]}(parts[j]) with
// parts = partitions_of(n) in canonical order.  Built once per n and cached.
struct character_table {
    int n;
    std::vector<partition> parts;
    std::vector<std::vector<std::int64_t>> chi;
    int index_of(const partition& lam) const; // position in parts; throws if absent
};
const character_table& char_table(int n);

// Exact p-expansions.  s_lam = sum_mu chi^lam(mu)/z_mu p_mu;
// h_n = sum_mu p_mu/z_mu; e_n = sum_mu sign(mu) p_mu/z_mu.  h_0 = e_0 = 1.
sym_series schur_to_p(const partition& lam, alphabet tag, const truncation& tr);
sym_series h_to_p(int n, alphabet tag, const truncation& tr);
sym_series e_to_p(int n, alphabet tag, const truncation& tr);

// One row of a Schur-pair decomposition: mult * s_{xp}(x) s_{yp}(y) at
// hbar-degree hbar_deg.  With the t = -hbar convention of series.hpp the
// stored t-exponent is the hbar-degree; no sign adjustment is involved.
struct report_row {
    partition xp;
    partition yp;
    int hbar_deg = 0;
    rat mult;
};

struct decomposition_report {
    std::vector<report_row> rows; // canonical order: (hbar_deg, |xp|+|yp|, xp, yp)
    bool all_integer = true;
};

// Expand a bisymmetric series on the Schur-pair basis via p_nu = sum_lam
// chi^lam(nu) s_lam applied in each alphabet.  Coefficients are exact;
// integrality is reported, not enforced (virtual characters are legal here).
// Cells — (x-weight, y-weight, t-exponent) blocks — are independent and are
// spread over `threads` workers; the merge order is canonical regardless.
decomposition_report schur_pair_expansion(const bisym_series& f, int threads = 1);

// Canonical report comparison used everywhere rows are sorted or merged.
bool report_row_less(const report_row& a, const report_row& b);

// Hall inner product, t-exponents multiplying as a Laurent product:
// <p_lam(x)p_mu(y), p_lam(x)p_mu(y)> = z_lam z_mu, distinct keys orthogonal.
tcoeff hall_inner(const bisym_series& a, const bisym_series& b);

// g^perp(f) for polynomial g: p_n^perp = n d/dp_n acting per alphabet,
// extended multiplicatively over the parts of each key of g and linearly over
// its terms; a t^k factor in g passes through as t^k.
bisym_series adjoint_apply(const bisym_series& g, const bisym_series& f);

} // namespace bisym
