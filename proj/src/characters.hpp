#pragma once

#include "bases.hpp"
#include "series.hpp"

namespace bisym {

// Named p-expansions of the classical one-alphabet characters: trivial /
// sign / Specht, the unital commutative series sum_n h_n, the Lie (Witt)
// character, its degree-shifted variants, and the log of the graded Poisson
// series.  Everything is exact and quotiented into the given truncation; the
// t-graded ones write their hbar-exponents through the t = -hbar convention
// of series.hpp, which is the one spot where polynomial degree and t-degree
// interlock — see the sign bookkeeping in characters.cpp.

inline sym_series ch_triv(int n, alphabet tag, const truncation& tr) {
    return h_to_p(n, tag, tr);
}
inline sym_series ch_sgn(int n, alphabet tag, const truncation& tr) {
    return e_to_p(n, tag, tr);
}
inline sym_series ch_specht(const partition& lam, alphabet tag, const truncation& tr) {
    return schur_to_p(lam, tag, tr);
}

// sum over n >= 0 of h_n, up to the truncation's degree bound.
sym_series ch_ucom(alphabet tag, const truncation& tr);

// Kernel of the plethystic logarithm:
//   L = sum_{k >= 1} (mu(k)/k) log(1 + p_k)
//     = sum_{k,j >= 1} (-1)^{j+1} (mu(k)/(kj)) p_{(k^j)},
// so that plethystic_log(f) = pleth(L, f).  Inverse to ch_ucom - 1 under
// plethysm in either order.
sym_series log_kernel(alphabet tag, const truncation& tr);

// sum_{n >= 1} (-mu(n)/n) log(1 - p_n) = sum_{n,k} (mu(n)/(nk)) p_{(n^k)}.
sym_series ch_lie(alphabet tag, const truncation& tr);

// The (d-1)-fold suspension of ch_lie; d = 1 returns ch_lie itself.
sym_series ch_lie_d(int d, alphabet tag, const truncation& tr);

// log of the degree-d graded Poisson series; exponentiating at d = 1 yields
// sum_{n >= 0} p_1^n.
sym_series log_ch_pois(int d, alphabet tag, const truncation& tr);

} // namespace bisym
