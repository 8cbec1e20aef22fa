#pragma once

#include "plethysm.hpp"
#include "series.hpp"

namespace bisym {

// Saturation: pass from a generating character to the character of everything
// it spans under disjoint union, i.e. plethystic_exp.  Requires the argument
// to vanish at the origin; `keep` is forwarded to exp1.
bisym_series saturate(const bisym_series& f, const key_filter& keep = {});

// R_n = sum over lam of weight n of s_lam(x) s_lam(y); stored on the p-basis
// as sum over mu of z_mu^{-1} p_mu(x) p_mu(y).  Quotiented into tr.
bisym_series regular_rep_char(int n, const truncation& tr);

// Box product, in contraction form: saturate both sides, then pair the inner
// alphabets, summing a_{lam,mu} b_{mu,rho} z_mu p_lam(x) p_rho(y) over common
// inner keys mu (never the empty one).  Outer x-degree is governed by f's
// truncation, outer y-degree by g's; t-windows intersect.
bisym_series box(const bisym_series& f, const bisym_series& g);

// Connected part of the box product: plethystic_log(box(f, g)).
// saturate(connected_box(f, g)) == box(f, g).
bisym_series connected_box(const bisym_series& f, const bisym_series& g);

// The regrading p_n(x) -> t^{-n} p_n(x), p_n(y) -> t^n p_n(y): each key
// (lam, mu, k) moves to t-exponent k + |mu| - |lam|.  A shift landing outside
// the t-window throws window_error — this map is a relabelling, and dropping
// terms would silently corrupt it.
bisym_series psi_regrade(const bisym_series& f);

// m! n! times the coefficient of p_{(1^m)}(x) p_{(1^n)}(y) t^k: the dimension
// of the bidegree-(m, n) layer at t-exponent k when f is a genuine character.
// Throws on out-of-truncation reads.
rat bidim_from_char(const bisym_series& f, int m, int n, int texp);

} // namespace bisym
