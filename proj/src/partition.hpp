#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bisym {

// An integer partition: a weakly decreasing sequence of positive parts.
// Immutable value type; the empty sequence is the unique partition of 0.
//
// The comparison order is "decreasing lexicographic": (4) < (3,1) < (2,2)
// < (2,1,1) < (1,1,1,1).  partitions_of() enumerates in exactly this order,
// and every report and golden file sorts by it, so keep the two in sync.
class partition {
public:
    partition() = default;
    explicit partition(std::vector<int> parts); // throws if not weakly decreasing positive

    static partition of_unsorted(std::vector<int> parts); // sorts first

    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; } // 0-based

    partition transposed() const;
    partition stretched(int n) const;             // every part multiplied by n >= 1
    partition merged(const partition& o) const;   // multiset union (p_a * p_b index)
    int multiplicity(int k) const;                // number of parts equal to k
    partition removed_one(int k) const;           // drop one copy of k; precondition: present

    // "3,1,1"; "[]" for the empty partition.  parse() accepts both forms.
    std::string to_string() const;
    static partition parse(std::string_view text);

    friend std::strong_ordering operator<=>(const partition& a, const partition& b);
    friend bool operator==(const partition& a, const partition& b) {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

std::strong_ordering operator<=>(const partition& a, const partition& b);

// z_lambda = prod_i i^{m_i} m_i!  (order of the centralizer of the class).
// Fits in 64 bits for every weight this library is asked to handle.
std::uint64_t z_of(const partition& lam);

// (-1)^{|lam| - l(lam)}: the sign of any permutation of cycle type lam.
inline int class_sign(const partition& lam) {
    return ((lam.weight() - lam.length()) % 2 == 0) ? 1 : -1;
}

// All partitions of n in decreasing lexicographic order.
std::vector<partition> partitions_of(int n);

// Shared cache of the above; safe for concurrent readers.
const std::vector<partition>& partitions_of_cached(int n);

// Moebius function; n >= 1.
int mobius(int n);

} // namespace bisym
