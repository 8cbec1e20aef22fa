#pragma once

#include "series.hpp"

namespace bisym {

// Plethysm through the power-sum characterization: every operation here is
// the unique (t-Laurent-linear, ring-morphism-in-the-first-argument) map
// determined by where it sends p_n.  The monomial-substitution definition is
// deliberately absent — it lives in the test oracle only.

// Substitute p_m -> p_{nm} and t^k -> t^{nk}.  Keys or exponents pushed past
// the truncation by the stretch are cut; on the two-alphabet form the cut is
// recorded via dropped_keys() (informational — the survivors are still the
// correct quotient representative).
sym_series adams(const sym_series& f, int n);
bisym_series adams(const bisym_series& f, int n);

// f o g: expand f over p's, send p_n -> adams(g, n); a t^k factor carried by
// f multiplies the result unstretched.  Requires g's constant term to be
// concentrated in t-exponents >= 1.  Result lives in g's alphabet/truncation.
sym_series pleth(const sym_series& f, const sym_series& g);

// Relative plethysm: the ring morphism in f determined by
//   p_n(x) -> adams(gbar, n),   p_n(y) -> adams(g, n) placed in y,
// g being read as a y-alphabet function whatever its tag.  Ties the pair
// (gbar, g) into one substitution; both must vanish at the origin.
bisym_series relpleth(const bisym_series& f, const bisym_series& gbar,
                      const sym_series& g);

// Exchange the roles of the two alphabets in every key.
bisym_series swap_alphabets(const bisym_series& f);

// Koike's two-alphabet plethysm: p_n(x) -> adams(gbar, n),
// p_n(y) -> adams(swap_alphabets(gbar), n).  Coincides with
// relpleth(f; gbar, 0) when f involves x only.
bisym_series koike_pleth(const bisym_series& f, const bisym_series& gbar);

// Exp(f) = exp(sum_{n>=1} adams(f, n)/n) - 1 and its inverse
// Log(f) = sum_{k>=1} (mu(k)/k) log(1 + adams(f, k)), both truncated.
// Preconditions as for exp1/log1: f vanishes at the origin.  `keep` is
// forwarded to exp1 (same ideal-quotient contract).
bisym_series plethystic_exp(const bisym_series& f, const key_filter& keep = {});
bisym_series plethystic_log(const bisym_series& f);

// omega: p_n -> (-1)^{n-1} p_n, i.e. the sign (-1)^{|lam|-l(lam)} on each
// key, applied per alphabet; t-exponents are untouched.
sym_series omega(const sym_series& f);
bisym_series omega_x(const bisym_series& f);
bisym_series omega_y(const bisym_series& f);
bisym_series omega_xy(const bisym_series& f);

} // namespace bisym
