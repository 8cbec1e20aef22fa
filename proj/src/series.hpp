#pragma once

// Truncated exact arithmetic in the completed rings of symmetric and
// bisymmetric functions with Laurent coefficients in one formal variable t.
//
// Sign convention, fixed once for the whole library:
//
//     t  =  -hbar.
//
// Graded objects enter through their graded trace sum_d (-hbar)^d tr(T_d),
// i.e. the degree-d layer sits at t-exponent d with an untwisted coefficient.
// Every formula stated in hbar elsewhere is rewritten in t at its one
// implementation site; nothing else in the code base is allowed to care about
// the sign.  In particular "hbar-degree d" and "t-exponent d" name the same
// number, and multiplicities read off at t^d need no sign fix.
//
// Everything is stored on the power-sum basis: a bisymmetric series is a
// finite map (lambda, mu) -> Laurent polynomial in t, standing for
// sum c_{lambda,mu}(t) p_lambda(x) p_mu(y).  Schur / h / e appear only at
// conversion boundaries (module bases).
//
// Truncation semantics: a series lives in the quotient by (total x-degree >
// deg_x), (total y-degree > deg_y), and (t-exponent outside the window).
// Degree truncation is an honest ring quotient.  The t-window is one as long
// as every operand has no t-exponents below 0 (the common case); for genuinely
// Laurent operands the window is storage, and in-window exactness is the
// caller's contract — the applications module asserts per-computation
// sufficiency rather than guessing globally.  Reads outside the truncation
// throw (a silent 0 would hide exactly the bugs this layer exists to stop).

#include "error.hpp"
#include "partition.hpp"
#include "rational.hpp"

#include <functional>
#include <map>
#include <string>

namespace bisym {

// ---------------------------------------------------------------------------
// Laurent polynomial in t over Q: the coefficient object of every series.
class tcoeff {
public:
    tcoeff() = default;
    static tcoeff one() { return term(0, 1); }
    static tcoeff term(int exp, rat value);

    bool is_zero() const { return c_.empty(); }
    rat at(int exp) const;
    int min_exp() const; // precondition: not zero
    int max_exp() const;

    void add_term(int exp, const rat& value);
    tcoeff& operator+=(const tcoeff& o);
    tcoeff& operator-=(const tcoeff& o);
    friend tcoeff operator+(tcoeff a, const tcoeff& b) { a += b; return a; }
    friend tcoeff operator-(tcoeff a, const tcoeff& b) { a -= b; return a; }
    friend tcoeff operator*(const tcoeff& a, const tcoeff& b); // Laurent convolution

    tcoeff scaled(const rat& v) const;
    tcoeff shifted(int dexp) const;   // multiply by t^dexp
    tcoeff stretched(int n) const;    // t^k -> t^{nk}
    // Keep exponents in [lo, hi]; reports whether anything was cut.
    tcoeff windowed(int lo, int hi, bool* dropped = nullptr) const;

    const std::map<int, rat>& terms() const { return c_; }
    friend bool operator==(const tcoeff& a, const tcoeff& b) { return a.c_ == b.c_; }

private:
    std::map<int, rat> c_; // exponent -> nonzero rational
};

// ---------------------------------------------------------------------------
struct truncation {
    int deg_x;
    int deg_y;
    int t_min;
    int t_max;

    truncation(int dx, int dy, int tmin, int tmax);

    bool contains(int wx, int wy, int texp) const {
        return wx <= deg_x && wy <= deg_y && texp >= t_min && texp <= t_max;
    }
    bool contains_degrees(int wx, int wy) const { return wx <= deg_x && wy <= deg_y; }

    truncation meet(const truncation& o) const; // componentwise intersection

    friend bool operator==(const truncation&, const truncation&) = default;
};

enum class alphabet : unsigned char { x, y };

// The (p_lambda(x), p_mu(y)) index of one stored term.
struct bikey {
    partition xp;
    partition yp;
    friend std::strong_ordering operator<=>(const bikey&, const bikey&) = default;
    friend bool operator==(const bikey&, const bikey&) = default;
};

// ---------------------------------------------------------------------------
// One-alphabet series: finite map partition -> tcoeff under a truncation.
// The tag records which alphabet the series is written in; embed() moves it
// into the two-alphabet ring.
class sym_series;
class bisym_series;

class sym_series {
public:
    sym_series(alphabet tag, truncation tr) : tag_(tag), tr_(tr) {}

    alphabet tag() const { return tag_; }
    const truncation& trunc() const { return tr_; }
    int degree_bound() const { return tag_ == alphabet::x ? tr_.deg_x : tr_.deg_y; }

    const std::map<partition, tcoeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Accumulate c * t^texp * p_lam, silently skipping keys outside the
    // truncation (constructor-style use; quotient semantics).  A skip raises
    // the dropped_keys() flag.
    void add_term(const partition& lam, int texp, const rat& c);
    void add_term(const partition& lam, const tcoeff& c);

    rat coeff(const partition& lam, int texp) const; // throws outside truncation

    // See bisym_series::dropped_keys(); the same sticky cut record.
    bool dropped_keys() const { return dropped_; }
    void mark_dropped() { dropped_ = true; }

    friend bool operator==(const sym_series& a, const sym_series& b) {
        return a.terms_ == b.terms_;
    }

private:
    alphabet tag_;
    truncation tr_;
    std::map<partition, tcoeff> terms_;
    bool dropped_ = false;
};

sym_series add(const sym_series& a, const sym_series& b);
sym_series sub(const sym_series& a, const sym_series& b);
sym_series mul(const sym_series& a, const sym_series& b);
sym_series scale(const sym_series& a, const rat& v);
sym_series scale(const sym_series& a, const tcoeff& v);
sym_series p_basis(alphabet tag, int n, const truncation& tr); // p_n as a series
sym_series retag(const sym_series& a, alphabet tag);

// ---------------------------------------------------------------------------
// Two-alphabet series.
class bisym_series {
public:
    explicit bisym_series(truncation tr) : tr_(tr) {}

    const truncation& trunc() const { return tr_; }
    const std::map<bikey, tcoeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const bikey& k, int texp, const rat& c);
    void add_term(const bikey& k, const tcoeff& c);
    void set_term(const bikey& k, tcoeff c); // overwrite; drops zero / out-of-range

    rat coeff(const partition& lam, const partition& mu, int texp) const; // throws outside truncation
    const tcoeff* find(const bikey& k) const;

    // Set when a truncation boundary cut something on the way to this value:
    // either directly (an add_term or adams stretch falling outside) or in
    // any input of the operation that built it — the combining operations
    // carry the flag forward, so it records the whole history of the value.
    // Informational: the surviving terms are still the correct quotient
    // representative.  Deliberate quotients (an exp1 key filter) stay silent.
    // Equality compares terms only and ignores the flag.
    bool dropped_keys() const { return dropped_; }
    void mark_dropped() { dropped_ = true; }

    friend bool operator==(const bisym_series& a, const bisym_series& b) {
        return a.terms_ == b.terms_;
    }

private:
    truncation tr_;
    std::map<bikey, tcoeff> terms_;
    bool dropped_ = false;
};

bisym_series add(const bisym_series& a, const bisym_series& b);
bisym_series sub(const bisym_series& a, const bisym_series& b);
bisym_series neg(const bisym_series& a);
bisym_series mul(const bisym_series& a, const bisym_series& b);
bisym_series scale(const bisym_series& a, const rat& v);
bisym_series scale(const bisym_series& a, const tcoeff& v);
bisym_series unit(const truncation& tr); // the constant 1
bisym_series embed(const sym_series& f); // f(x) -> f ⊗ 1,  f(y) -> 1 ⊗ f

// Largest t-exponent-0-free check: true when the (empty,empty) coefficient is
// supported in strictly positive t-exponents (or absent).  The plethysm-style
// operations require this of their second arguments.
bool vanishes_at_origin(const bisym_series& f);
bool vanishes_at_origin(const sym_series& f);

// Ring exponential minus one and logarithm of one-plus, computed degreewise
// (Euler recurrence on the total-degree grading; the degree-0 layer, a Laurent
// polynomial with positive t-valuation, is handled by its own recurrence).
// Preconditions: vanishes_at_origin(f).
//
// keep: optional key filter defining a further quotient.  Passing one asserts
// that the discarded keys span a multiplicative ideal within the truncated
// ring (true e.g. for "y-weight minus x-weight exceeds a bound" when every
// key of f has nonnegative such difference); the caller owns that proof.
using key_filter = std::function<bool(const bikey&)>;
bisym_series exp1(const bisym_series& f, const key_filter& keep = {});
bisym_series log1(const bisym_series& f);

// If every currently stored term lies inside `to`, return the same series
// re-homed to the (usually tighter) truncation; otherwise drop the outliers
// (quotient semantics).
bisym_series rehome(const bisym_series& f, const truncation& to);

} // namespace bisym
