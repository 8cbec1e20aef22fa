#pragma once

#include "series.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace bisym::expr {

// Surface syntax for the kernel.  Atoms are p[k](x|y), h[k](x|y), e[k](x|y),
// s[lam](x|y) with lam a bracketed comma list, `hbar`, the series E (sum of
// h_r(x)), its plethystic-log partner L, and R[n]; literals are integers and
// rationals written n/m as a single token.  Operators: + - * and ^ with an
// integer exponent; named calls pleth(f,g), relpleth(f;g,h), koike(f,g),
// sat(f), box(f,g), cbox(f,g), omega(f), omega_x(f), omega_y(f), psi(f),
// exp1(f), log1(f).  Alphabets are mandatory on atoms — they are semantic,
// never inferable.  Grammar is LL(1); see docs/expressions.md for the EBNF.

enum class kind {
    literal,  // lit
    atom,     // p/h/e/s: fn in {"p","h","e","s"}, index or lam, alpha
    hbar,
    series_E,
    series_L,
    series_R, // index
    add,
    sub,
    neg,
    mul,
    pow, // args[0] ^ index
    call // fn, args
};

struct node;
using node_ptr = std::unique_ptr<node>;

struct node {
    kind k;
    int line = 1;
    int col = 1;
    rat lit;
    std::string fn;
    int index = 0;
    partition lam;
    alphabet alpha = alphabet::x;
    std::vector<node_ptr> args;
};

// Throws parse_error (with position) on malformed input.
node_ptr parse(std::string_view text);

// Canonical rendering; parse(print(e)) reproduces e.
std::string print(const node& e);

// Throws domain/window errors from the kernel, decorated with the source
// position of the offending subexpression.
bisym_series evaluate(const node& e, const truncation& tr);

} // namespace bisym::expr
