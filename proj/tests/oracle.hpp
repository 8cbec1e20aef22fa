#pragma once

// Brute-force reference implementations, used only by tests.  Everything here
// expands series into honest polynomials in finitely many variables and never
// touches the kernel's truncated arithmetic — that independence is the point.

#include "series.hpp"

#include <map>
#include <vector>

namespace bisym::oracle {

// Dense-by-construction multivariate polynomial over Q in x_1..x_r, y_1..y_s
// and the grading variable t.  Exponent vectors have length r + s + 1 with
// the t exponent last (it may be negative).
struct poly {
    int r = 0;
    int s = 0;
    std::map<std::vector<int>, rat> terms;

    friend bool operator==(const poly&, const poly&) = default;
};

poly zero_poly(int r, int s);
poly const_poly(int r, int s, const rat& c);
poly add(const poly& a, const poly& b);
poly sub(const poly& a, const poly& b);
poly mul(const poly& a, const poly& b);

// Substitute p_n(x) -> x_1^n + .. + x_r^n, p_n(y) -> y_1^n + .. + y_s^n.
// Faithful on series of x-degree <= r and y-degree <= s (not enforced).
poly eval_finite(const bisym_series& f, int r, int s);
// One-alphabet form; the series' own tag picks the variable block.
poly eval_finite(const sym_series& f, int r, int s);

// Definitional plethysm: expand g in x_1..x_r, collect its monomials with
// multiplicity as a value list, and evaluate f's power sums on that list.
// Both arguments are read in the x block whatever their tags.  Throws
// domain_error if g's expansion has a coefficient outside the nonnegative
// integers (the multiset reading does not apply then).
poly pleth_by_substitution(const sym_series& f, const sym_series& g, int r);

// Definitional relative plethysm: the x-side power sums of fbar evaluate on
// gbar's monomial list in x_1..x_r, y_1..y_s, the y-side ones on g's monomial
// list placed in the y block (whatever g's tag).  Same nonnegativity rule.
poly relpleth_by_substitution(const bisym_series& fbar, const bisym_series& gbar,
                              const sym_series& g, int r, int s);

} // namespace bisym::oracle
