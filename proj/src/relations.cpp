#include "zdqft/relations.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>
#include <set>
#include <stdexcept>

#include "zdqft/combinatorics.hpp"
#include "zdqft/series.hpp"

namespace zdqft {

namespace {

constexpr unsigned kDefaultCap = 5;
constexpr unsigned kLargeCap = 6;

void check_cap(unsigned n, bool allow_large) {
    if (n < 1) throw std::invalid_argument("relation enumeration needs n >= 1");
    const unsigned cap = allow_large ? kLargeCap : kDefaultCap;
    if (n > cap)
        throw std::out_of_range("relation enumeration capped at n = " + std::to_string(cap));
    if (n > kDefaultCap)
        std::cerr << "warning: enumerating relations on " << n << " points scans 2^"
                  << n * (n - 1) << " candidates; this takes a while\n";
}

}  // namespace

Relation::Relation(unsigned n) : rows_(n) {
    if (n == 0 || n > 31) throw std::invalid_argument("Relation: need 1 <= n <= 31");
    for (unsigned i = 0; i < n; ++i) rows_[i] = 1u << i;
}

Relation Relation::from_rows(std::vector<std::uint32_t> rows) {
    Relation r(static_cast<unsigned>(rows.size()));
    const std::uint32_t width_mask =
        rows.size() >= 32 ? ~0u : ((1u << rows.size()) - 1);
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i] & ~width_mask)
            throw std::invalid_argument("Relation::from_rows: bits beyond n points");
    r.rows_ = std::move(rows);
    return r;
}

bool Relation::reflexive() const {
    for (unsigned i = 0; i < size(); ++i)
        if (!related(i, i)) return false;
    return true;
}

bool Relation::transitive() const {
    // i <= j forces row_j subset of row_i.
    for (unsigned i = 0; i < size(); ++i) {
        std::uint32_t reach = 0;
        for (std::uint32_t m = rows_[i]; m;) {
            const unsigned j = static_cast<unsigned>(__builtin_ctz(m));
            m &= m - 1;
            reach |= rows_[j];
        }
        if (reach & ~rows_[i]) return false;
    }
    return true;
}

bool Relation::antisymmetric() const {
    for (unsigned i = 0; i < size(); ++i)
        for (unsigned j = i + 1; j < size(); ++j)
            if (related(i, j) && related(j, i)) return false;
    return true;
}

std::vector<std::string> Relation::row_strings() const {
    std::vector<std::string> out;
    for (unsigned i = 0; i < size(); ++i) {
        std::string s(size(), '0');
        for (unsigned j = 0; j < size(); ++j)
            if (related(i, j)) s[j] = '1';
        out.push_back(std::move(s));
    }
    return out;
}

bool is_connected(const Relation& r) {
    const unsigned n = r.size();
    std::vector<std::uint32_t> adj(n);
    for (unsigned i = 0; i < n; ++i) adj[i] = r.row(i);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (r.related(i, j)) adj[j] |= 1u << i;
    std::uint32_t frontier = 1u, seen = 1u;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t m = frontier; m;) {
            const unsigned i = static_cast<unsigned>(__builtin_ctz(m));
            m &= m - 1;
            next |= adj[i];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (n >= 32 ? ~0u : (1u << n) - 1);
}

std::vector<Relation> enumerate_preorders(unsigned n, bool allow_large) {
    check_cap(n, allow_large);
    const unsigned off_bits = n * (n - 1);
    // Off-diagonal bit positions, row-major.
    std::vector<std::pair<unsigned, unsigned>> pos;
    pos.reserve(off_bits);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (i != j) pos.emplace_back(i, j);

    std::vector<Relation> out;
    std::vector<std::uint32_t> rows(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << off_bits); ++mask) {
        for (unsigned i = 0; i < n; ++i) rows[i] = 1u << i;
        for (unsigned b = 0; b < off_bits; ++b)
            if ((mask >> b) & 1) rows[pos[b].first] |= 1u << pos[b].second;
        bool ok = true;
        for (unsigned i = 0; i < n && ok; ++i) {
            std::uint32_t reach = 0;
            for (std::uint32_t m = rows[i]; m;) {
                const unsigned j = static_cast<unsigned>(__builtin_ctz(m));
                m &= m - 1;
                reach |= rows[j];
            }
            ok = (reach & ~rows[i]) == 0;
        }
        if (ok) out.push_back(Relation::from_rows(rows));
    }
    return out;
}

std::vector<Relation> enumerate_posets(unsigned n, bool allow_large) {
    std::vector<Relation> out;
    for (const auto& r : enumerate_preorders(n, allow_large))
        if (r.antisymmetric()) out.push_back(r);
    return out;
}

QuotientResult quotient(const Relation& r) {
    if (!r.is_preorder()) throw std::domain_error("quotient: relation is not a preorder");
    const unsigned n = r.size();

    std::vector<int> block_of(n, -1);
    std::vector<std::vector<unsigned>> blocks;
    for (unsigned i = 0; i < n; ++i) {
        if (block_of[i] >= 0) continue;
        const int b = static_cast<int>(blocks.size());
        blocks.push_back({i});
        block_of[i] = b;
        for (unsigned j = i + 1; j < n; ++j)
            if (r.related(i, j) && r.related(j, i)) {
                blocks[b].push_back(j);
                block_of[j] = b;
            }
    }

    const unsigned k = static_cast<unsigned>(blocks.size());
    Relation induced(k);
    for (unsigned a = 0; a < k; ++a)
        for (unsigned b = 0; b < k; ++b)
            if (r.related(blocks[a][0], blocks[b][0])) induced.set(a, b);
    if (!induced.is_poset())
        throw std::logic_error("quotient: induced block relation is not a poset");
    return QuotientResult{induced, std::move(blocks)};
}

Relation canonical_relation(const Relation& r) {
    const unsigned n = r.size();
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint32_t> best, cand(n);
    do {
        for (unsigned i = 0; i < n; ++i) {
            std::uint32_t row = 0;
            for (unsigned j = 0; j < n; ++j)
                if (r.related(perm[i], perm[j])) row |= 1u << j;
            cand[i] = row;
        }
        if (best.empty() || cand < best) best = cand;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Relation::from_rows(best);
}

std::size_t count_unlabelled(std::span<const Relation> structures) {
    std::set<Relation> reps;
    for (const auto& r : structures) reps.insert(canonical_relation(r));
    return reps.size();
}

StirlingIdentityReport verify_stirling_identity(unsigned n) {
    StirlingIdentityReport report;
    report.n = n;

    std::vector<std::uint64_t> fiber_count(n + 1, 0);
    for (const auto& r : enumerate_preorders(n))
        if (is_connected(r)) {
            ++report.connected_preorders;
            ++fiber_count[quotient(r).blocks.size()];
        }

    const StirlingTable stirling(n);
    std::vector<std::uint64_t> d(n + 1, 0);
    for (unsigned k = 1; k <= n; ++k)
        for (const auto& p : enumerate_posets(k))
            if (is_connected(p)) ++d[k];

    bool fibers_ok = true;
    for (unsigned k = 1; k <= n; ++k) {
        const std::uint64_t expected = stirling.value(n, k).get_ui() * d[k];
        report.stirling_sum += expected;
        report.fibers.push_back({k, fiber_count[k], stirling.value(n, k).get_ui(), d[k]});
        fibers_ok = fibers_ok && fiber_count[k] == expected;
    }
    report.pass = fibers_ok && report.connected_preorders == report.stirling_sum;
    return report;
}

ConnectedTotalsReport connected_totals_cross_check(unsigned n_max) {
    ConnectedTotalsReport report;
    report.n_max = n_max;

    auto run = [&](bool posets, std::vector<std::uint64_t>& connected,
                   std::vector<std::uint64_t>& total, std::vector<std::uint64_t>& from_exp) {
        connected.assign(n_max + 1, 0);
        total.assign(n_max + 1, 0);
        total[0] = 1;  // the empty structure
        for (unsigned n = 1; n <= n_max; ++n) {
            const auto all = posets ? enumerate_posets(n) : enumerate_preorders(n);
            total[n] = all.size();
            for (const auto& r : all)
                if (is_connected(r)) ++connected[n];
        }
        TruncSeries<Rational> egf(n_max);
        for (unsigned n = 1; n <= n_max; ++n)
            egf.set_coeff(n, Rational(Integer(connected[n]), factorial(n)));
        const TruncSeries<Rational> totals_egf = exp(egf);
        from_exp.assign(n_max + 1, 0);
        for (unsigned n = 0; n <= n_max; ++n) {
            const Rational t = egf_coeff(totals_egf, n);
            if (!t.is_integer())
                throw std::logic_error("connected_totals_cross_check: non-integer total");
            from_exp[n] = t.numerator().get_ui();
        }
    };

    run(true, report.poset_connected, report.poset_total, report.poset_total_from_exp);
    run(false, report.preorder_connected, report.preorder_total, report.preorder_total_from_exp);
    report.pass = report.poset_total == report.poset_total_from_exp &&
                  report.preorder_total == report.preorder_total_from_exp;
    return report;
}

}  // namespace zdqft
