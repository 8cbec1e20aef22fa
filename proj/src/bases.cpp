#include "bases.hpp"

#include "error.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <thread>

namespace bisym {

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama via beta-numbers.
//
// Represent lam (padded to length l) by the strictly decreasing beta-set
// {lam_i + l - i}.  Removing a border strip of size k corresponds to replacing
// some beta b by b - k (when b - k is free), and the strip height equals the
// number of betas strictly between b - k and b.  This turns strip enumeration
// into integer bookkeeping with no diagram walking.

namespace {

std::vector<int> betas_of(const partition& lam) {
    const auto& p = lam.parts();
    int l = static_cast<int>(p.size());
    std::vector<int> b(p.size());
    for (int i = 0; i < l; ++i)
        b[static_cast<size_t>(i)] = p[static_cast<size_t>(i)] + (l - 1 - i);
    return b; // strictly decreasing
}

partition partition_from_betas(std::vector<int> b) {
    std::sort(b.begin(), b.end(), std::greater<int>());
    int l = static_cast<int>(b.size());
    std::vector<int> parts;
    for (int i = 0; i < l; ++i) {
        int part = b[static_cast<size_t>(i)] - (l - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return partition(std::move(parts));
}

std::shared_mutex char_memo_mutex;
std::map<std::pair<partition, partition>, std::int64_t> char_memo;

} // namespace

std::int64_t char_value(const partition& lam, const partition& mu) {
    if (lam.weight() != mu.weight())
        throw domain_error("char_value: partitions of different weights");
    if (mu.empty()) return 1; // lam is empty too

    auto key = std::make_pair(lam, mu);
    {
        std::shared_lock lock(char_memo_mutex);
        auto it = char_memo.find(key);
        if (it != char_memo.end()) return it->second;
    }

    // Strip off the largest part of mu; recurse through char_value so every
    // subproblem lands in the shared memo.
    int k = mu.part(0);
    partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));

    std::vector<int> b = betas_of(lam);
    std::int64_t total = 0;
    for (size_t i = 0; i < b.size(); ++i) {
        int target = b[i] - k;
        if (target < 0) continue;
        bool free_slot = true;
        int height = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            if (j == i) continue;
            if (b[j] == target) { free_slot = false; break; }
            if (b[j] > target && b[j] < b[i]) ++height;
        }
        if (!free_slot) continue;
        std::vector<int> b2 = b;
        b2[i] = target;
        std::int64_t sub = char_value(partition_from_betas(std::move(b2)), rest);
        total += (height % 2 == 0) ? sub : -sub;
    }

    {
        std::unique_lock lock(char_memo_mutex);
        char_memo.emplace(std::move(key), total);
    }
    return total;
}

// ---------------------------------------------------------------------------

int character_table::index_of(const partition& lam) const {
    auto it = std::lower_bound(parts.begin(), parts.end(), lam);
    if (it == parts.end() || !(*it == lam))
        throw domain_error("partition not of weight " + std::to_string(n));
    return static_cast<int>(it - parts.begin());
}

const character_table& char_table(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<character_table>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
    }
    auto t = std::make_unique<character_table>();
    t->n = n;
    t->parts = partitions_of(n);
    size_t m = t->parts.size();
    t->chi.assign(m, std::vector<std::int64_t>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            t->chi[i][j] = char_value(t->parts[i], t->parts[j]);
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.try_emplace(n, std::move(t));
    (void)inserted; // a concurrent builder may have won; theirs is identical
    return *it->second;
}

// ---------------------------------------------------------------------------
// p-expansions

sym_series schur_to_p(const partition& lam, alphabet tag, const truncation& tr) {
    sym_series out(tag, tr);
    for (const partition& mu : partitions_of_cached(lam.weight())) {
        std::int64_t chi = char_value(lam, mu);
        if (chi == 0) continue;
        rat c(chi);
        c /= rat(static_cast<unsigned long>(z_of(mu)));
        out.add_term(mu, 0, c);
    }
    return out;
}

sym_series h_to_p(int n, alphabet tag, const truncation& tr) {
    if (n < 0) throw domain_error("h_n needs n >= 0");
    sym_series out(tag, tr);
    for (const partition& mu : partitions_of_cached(n))
        out.add_term(mu, 0, frac(1, 1) / rat(static_cast<unsigned long>(z_of(mu))));
    return out;
}

sym_series e_to_p(int n, alphabet tag, const truncation& tr) {
    if (n < 0) throw domain_error("e_n needs n >= 0");
    sym_series out(tag, tr);
    for (const partition& mu : partitions_of_cached(n))
        out.add_term(mu, 0, rat(class_sign(mu)) / rat(static_cast<unsigned long>(z_of(mu))));
    return out;
}

// ---------------------------------------------------------------------------
// Schur-pair expansion

bool report_row_less(const report_row& a, const report_row& b) {
    if (a.hbar_deg != b.hbar_deg) return a.hbar_deg < b.hbar_deg;
    int wa = a.xp.weight() + a.yp.weight();
    int wb = b.xp.weight() + b.yp.weight();
    if (wa != wb) return wa < wb;
    if (a.xp != b.xp) return a.xp < b.xp;
    return a.yp < b.yp;
}

namespace {

struct cell_id {
    int wx, wy, texp;
    auto operator<=>(const cell_id&) const = default;
};

// Convert one (x-weight, y-weight, t-exponent) cell by two one-sided
// character-table products:
//   T[alpha][mu]   = sum_lam chi^alpha(lam) C[lam][mu],
//   M[alpha][beta] = sum_mu  T[alpha][mu]  chi^beta(mu).
void expand_cell(const cell_id& id, const std::map<bikey, rat>& terms,
                 std::vector<report_row>& rows, bool& all_integer) {
    const character_table& tx = char_table(id.wx);
    const character_table& ty = char_table(id.wy);
    size_t nx = tx.parts.size(), ny = ty.parts.size();

    std::vector<std::vector<rat>> C(nx, std::vector<rat>(ny, rat(0)));
    for (const auto& [k, v] : terms)
        C[static_cast<size_t>(tx.index_of(k.xp))][static_cast<size_t>(ty.index_of(k.yp))] = v;

    std::vector<std::vector<rat>> T(nx, std::vector<rat>(ny, rat(0)));
    for (size_t a = 0; a < nx; ++a)
        for (size_t l = 0; l < nx; ++l) {
            std::int64_t chi = tx.chi[a][l];
            if (chi == 0) continue;
            for (size_t m = 0; m < ny; ++m) {
                if (C[l][m] == 0) continue;
                T[a][m] += rat(chi) * C[l][m];
            }
        }
    for (size_t a = 0; a < nx; ++a)
        for (size_t b = 0; b < ny; ++b) {
            rat acc(0);
            for (size_t m = 0; m < ny; ++m) {
                if (T[a][m] == 0) continue;
                std::int64_t chi = ty.chi[b][m];
                if (chi == 0) continue;
                acc += T[a][m] * rat(chi);
            }
            if (acc == 0) continue;
            rows.push_back(report_row{tx.parts[a], ty.parts[b], id.texp, acc});
            if (!is_integer(acc)) all_integer = false;
        }
}

} // namespace

decomposition_report schur_pair_expansion(const bisym_series& f, int threads) {
    std::map<cell_id, std::map<bikey, rat>> cells;
    for (const auto& [k, c] : f.terms())
        for (const auto& [e, v] : c.terms())
            cells[cell_id{k.xp.weight(), k.yp.weight(), e}].emplace(k, v);

    std::vector<const std::pair<const cell_id, std::map<bikey, rat>>*> work;
    work.reserve(cells.size());
    for (const auto& kv : cells) work.push_back(&kv);

    std::vector<std::vector<report_row>> cell_rows(work.size());
    std::vector<char> cell_integral(work.size(), 1);

    size_t n_workers =
        std::min(work.size(), static_cast<size_t>(std::max(threads, 1)));
    if (n_workers <= 1) {
        for (size_t i = 0; i < work.size(); ++i) {
            bool ok = true;
            expand_cell(work[i]->first, work[i]->second, cell_rows[i], ok);
            cell_integral[i] = ok;
        }
    } else {
        // Warm the character-table cache up front so workers only read it.
        for (const auto* w : work) {
            char_table(w->first.wx);
            char_table(w->first.wy);
        }
        std::atomic<size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mu;
        auto run = [&] {
            try {
                for (size_t i = next.fetch_add(1); i < work.size(); i = next.fetch_add(1)) {
                    bool ok = true;
                    expand_cell(work[i]->first, work[i]->second, cell_rows[i], ok);
                    cell_integral[i] = ok;
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mu);
                if (!failure) failure = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        for (size_t w = 0; w < n_workers; ++w) pool.emplace_back(run);
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    decomposition_report rep;
    for (size_t i = 0; i < work.size(); ++i) {
        rep.rows.insert(rep.rows.end(), cell_rows[i].begin(), cell_rows[i].end());
        if (!cell_integral[i]) rep.all_integer = false;
    }
    std::sort(rep.rows.begin(), rep.rows.end(), report_row_less);
    return rep;
}

// ---------------------------------------------------------------------------
// Hall pairing and adjoints

tcoeff hall_inner(const bisym_series& a, const bisym_series& b) {
    tcoeff out;
    for (const auto& [k, ca] : a.terms()) {
        const tcoeff* cb = b.find(k);
        if (!cb) continue;
        rat z = rat(static_cast<unsigned long>(z_of(k.xp))) *
                rat(static_cast<unsigned long>(z_of(k.yp)));
        out += (ca * *cb).scaled(z);
    }
    return out;
}

namespace {

// p_n^perp in one alphabet: n * d/dp_n on each stored key.
bisym_series pn_perp(int n, alphabet side, const bisym_series& f) {
    bisym_series out(f.trunc());
    if (f.dropped_keys()) out.mark_dropped();
    for (const auto& [k, c] : f.terms()) {
        const partition& target = (side == alphabet::x) ? k.xp : k.yp;
        int m = target.multiplicity(n);
        if (m == 0) continue;
        bikey k2 = (side == alphabet::x)
                       ? bikey{target.removed_one(n), k.yp}
                       : bikey{k.xp, target.removed_one(n)};
        out.add_term(k2, c.scaled(rat(static_cast<long>(n) * m)));
    }
    return out;
}

} // namespace

bisym_series adjoint_apply(const bisym_series& g, const bisym_series& f) {
    bisym_series out(f.trunc());
    if (g.dropped_keys() || f.dropped_keys()) out.mark_dropped();
    for (const auto& [k, c] : g.terms()) {
        bisym_series cur = f;
        for (int part : k.xp.parts()) cur = pn_perp(part, alphabet::x, cur);
        for (int part : k.yp.parts()) cur = pn_perp(part, alphabet::y, cur);
        if (cur.is_zero()) continue;
        out = add(out, scale(cur, c));
    }
    return rehome(out, f.trunc());
}

} // namespace bisym
