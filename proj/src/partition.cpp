#include "partition.hpp"

#include "error.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>

namespace bisym {

partition::partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw domain_error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw domain_error("partition parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

partition partition::of_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return partition(std::move(parts));
}

partition partition::transposed() const {
    if (parts_.empty()) return {};
    std::vector<int> cols(static_cast<size_t>(parts_[0]));
    for (int c = 0; c < parts_[0]; ++c) {
        int n = 0;
        for (int p : parts_)
            if (p > c) ++n;
        cols[static_cast<size_t>(c)] = n;
    }
    return partition(std::move(cols));
}

partition partition::stretched(int n) const {
    if (n < 1) throw domain_error("stretch factor must be positive");
    std::vector<int> out(parts_);
    for (int& p : out) p *= n;
    return partition(std::move(out));
}

partition partition::merged(const partition& o) const {
    std::vector<int> out;
    out.reserve(parts_.size() + o.parts_.size());
    std::merge(parts_.begin(), parts_.end(), o.parts_.begin(), o.parts_.end(),
               std::back_inserter(out), std::greater<int>());
    return partition(std::move(out));
}

int partition::multiplicity(int k) const {
    int n = 0;
    for (int p : parts_)
        if (p == k) ++n;
    return n;
}

partition partition::removed_one(int k) const {
    std::vector<int> out;
    out.reserve(parts_.size());
    bool done = false;
    for (int p : parts_) {
        if (!done && p == k) {
            done = true;
            continue;
        }
        out.push_back(p);
    }
    if (!done) throw domain_error("removed_one: part not present");
    return partition(std::move(out));
}

std::string partition::to_string() const {
    if (parts_.empty()) return "[]";
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

partition partition::parse(std::string_view text) {
    if (text == "[]" || text.empty()) return {};
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < text.size()) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
        if (ec != std::errc() || v <= 0)
            throw domain_error("cannot parse partition: '" + std::string(text) + "'");
        parts.push_back(v);
        pos = static_cast<size_t>(ptr - text.data());
        if (pos < text.size()) {
            if (text[pos] != ',')
                throw domain_error("cannot parse partition: '" + std::string(text) + "'");
            ++pos;
        }
    }
    return partition(std::move(parts));
}

std::strong_ordering operator<=>(const partition& a, const partition& b) {
    // Bigger leading parts come first; a strict prefix precedes its extensions.
    return std::lexicographical_compare_three_way(
        a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(),
        [](int x, int y) { return y <=> x; });
}

std::uint64_t z_of(const partition& lam) {
    std::uint64_t z = 1;
    const auto& parts = lam.parts();
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        std::uint64_t m = j - i;
        for (std::uint64_t r = 1; r <= m; ++r)
            z *= static_cast<std::uint64_t>(parts[i]) * r; // i^m * m! interleaved
        i = j;
    }
    return z;
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& stack,
                    std::vector<partition>& out) {
    if (n == 0) {
        out.push_back(partition(stack));
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        stack.push_back(k);
        gen_partitions(n - k, k, stack, out);
        stack.pop_back();
    }
}

} // namespace

std::vector<partition> partitions_of(int n) {
    if (n < 0) throw domain_error("partitions_of: negative weight");
    std::vector<partition> out;
    std::vector<int> stack;
    gen_partitions(n, n, stack, out);
    return out;
}

const std::vector<partition>& partitions_of_cached(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<partition>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, partitions_of(n)).first;
    return it->second;
}

int mobius(int n) {
    if (n < 1) throw domain_error("mobius: n must be positive");
    int primes = 0;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++primes;
        }
    }
    if (n > 1) ++primes;
    return (primes % 2 == 0) ? 1 : -1;
}

} // namespace bisym
