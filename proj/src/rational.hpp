#pragma once

#include <gmpxx.h>

#include <string>

namespace bisym {

// Exact rational coefficients. GMP does the heavy lifting; we only add the
// couple of helpers the rest of the code keeps reaching for.
using rat = mpq_class;

// mpq_class(num, den) does not canonicalize on its own.
inline rat frac(long num, long den) {
    rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const rat& q) { return q.get_den() == 1; }

// "num/den", or just "num" for integers — the form used in JSON output.
inline std::string rat_to_string(const rat& q) { return q.get_str(); }

// Accepts the same forms back (returns false on garbage).
inline bool rat_from_string(const std::string& s, rat& out) {
    if (s.empty()) return false;
    mpq_class q;
    if (q.set_str(s, 10) != 0) return false;
    if (q.get_den() == 0) return false;
    q.canonicalize();
    out = q;
    return true;
}

} // namespace bisym
