#pragma once

#include "bases.hpp"
#include "propcalc.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace bisym {

// The three generator families whose saturations this library reports on.
//   full      (Q)  : one output or none                    sum_{p>=1} h_p(y)(1 + h_1(x))
//   subprop   (Qtilde): exactly one output                  sum_{p>=1} h_p(y) h_1(x)
//   nonunital (Qprime): as `full` minus the (1,1) generator sum h_p(y) + sum_{p>=2} h_p(y) h_1(x)
enum class bimodule_variant { full, subprop, nonunital };

// CLI-facing names: "Q", "Qtilde", "Qprime".
std::string_view variant_name(bimodule_variant v);
bool variant_from_name(std::string_view name, bimodule_variant& out);

bisym_series ch_generator(bimodule_variant v, const truncation& tr);

// The whole pipeline: omega_x omega_y ( Psi ( 1 + Sat(generator) ) ), with
// keys whose y-minus-x weight difference exceeds tr.t_max pruned inside the
// saturation.  The pruning is an exact quotient here: every generator key has
// nonnegative difference, so the large-difference span is an ideal.  It also
// guarantees Psi stays inside the t-window (each key lands at t = difference).
bisym_series ch_H(bimodule_variant v, const truncation& tr);

// Schur-pair rows of ch_H at t-exponent d, restricted to |x-part| <= q_max
// and |y-part| <= p_max.  Multiplicities must come out positive integers —
// anything else signals a convention bug and throws.
decomposition_report decomposition_report_for(bimodule_variant v, int d,
                                              int q_max, int p_max,
                                              int threads = 1);

struct counts_row {
    int d;
    std::int64_t n_irr;    // distinct rows with nonzero multiplicity
    std::int64_t sum_mult; // total multiplicity
};

// Row counts for the `nonunital` reports at every degree 1..d_max, computed
// from a single saturation at truncation (d_max, 2 d_max): a degree-d row of
// this variant has |x-part| <= d (every generator key contributes at least 1
// to the difference and at most 1 to the x-weight) and so |y-part| <= 2d.
std::vector<counts_row> albanese_counts(int d_max, int threads = 1);

} // namespace bisym
