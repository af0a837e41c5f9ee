#include "zdqft/combinatorics.hpp"

#include <stdexcept>

namespace zdqft {

StirlingTable::StirlingTable(unsigned n_max) : n_max_(n_max), zero_(0) {
    rows_.resize(n_max + 1);
    rows_[0] = {Integer(1)};
    for (unsigned n = 1; n <= n_max; ++n) {
        rows_[n].assign(n + 1, Integer(0));
        for (unsigned k = 1; k <= n; ++k) {
            Integer v = rows_[n - 1][k - 1];
            if (k <= n - 1) v += k * rows_[n - 1][k];
            rows_[n][k] = v;
        }
    }
}

const Integer& StirlingTable::value(unsigned n, unsigned k) const {
    if (n > n_max_) throw std::out_of_range("StirlingTable: n past table size");
    if (k >= rows_[n].size()) return zero_;
    return rows_[n][k];
}

std::vector<Integer> StirlingTable::row(unsigned n) const {
    if (n > n_max_ || n == 0) throw std::out_of_range("StirlingTable: bad row index");
    return std::vector<Integer>(rows_[n].begin() + 1, rows_[n].end());
}

StirlingTable stirling2_table(unsigned n_max) { return StirlingTable(n_max); }

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Recurrence: return "recurrence";
        case Provenance::Enumeration: return "enumeration";
        case Provenance::Series: return "series";
    }
    return "unknown";
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

SequenceRecord bell_numbers(unsigned n_max) {
    StirlingTable table(n_max);
    std::vector<Integer> bell(n_max + 1);
    bell[0] = 1;
    for (unsigned n = 1; n <= n_max; ++n) {
        Integer sum = 0;
        for (unsigned k = 1; k <= n; ++k) sum += table.value(n, k);
        bell[n] = sum;
    }
    // Independent route: B_{n+1} = sum_j C(n,j) B_j.
    for (unsigned n = 0; n < n_max; ++n) {
        Integer next = 0;
        for (unsigned j = 0; j <= n; ++j) next += binomial(n, j) * bell[j];
        if (next != bell[n + 1])
            throw std::logic_error("bell_numbers: Stirling sums disagree with binomial recurrence");
    }
    return {"bell", std::move(bell), Provenance::Recurrence};
}

SequenceRecord partition_counts(unsigned n_max) {
    std::vector<Integer> ways(n_max + 1, Integer(0));
    ways[0] = 1;
    for (unsigned part = 1; part <= n_max; ++part)
        for (unsigned s = part; s <= n_max; ++s) ways[s] += ways[s - part];
    return {"partitions", std::move(ways), Provenance::Series};
}

namespace {

constexpr unsigned kSetPartitionCap = 12;

void rgs_rec(unsigned n, unsigned i, unsigned blocks, std::vector<std::uint8_t>& rgs,
             const std::function<void(std::span<const std::uint8_t>)>& visit) {
    if (i == n) {
        visit(std::span<const std::uint8_t>(rgs.data(), n));
        return;
    }
    for (unsigned v = 0; v <= blocks; ++v) {
        rgs[i] = static_cast<std::uint8_t>(v);
        rgs_rec(n, i + 1, v == blocks ? blocks + 1 : blocks, rgs, visit);
    }
}

}  // namespace

void for_each_set_partition(unsigned n,
                            const std::function<void(std::span<const std::uint8_t>)>& visit) {
    if (n > kSetPartitionCap)
        throw std::out_of_range("for_each_set_partition: n exceeds enumeration cap of 12");
    if (n == 0) {
        visit({});
        return;
    }
    std::vector<std::uint8_t> rgs(n, 0);
    // First element is always in block 0; the growth condition does the rest.
    rgs_rec(n, 1, 1, rgs, visit);
}

std::vector<std::vector<std::uint8_t>> set_partitions_enumerate(unsigned n) {
    std::vector<std::vector<std::uint8_t>> out;
    for_each_set_partition(n, [&](std::span<const std::uint8_t> rgs) {
        out.emplace_back(rgs.begin(), rgs.end());
    });
    return out;
}

std::vector<Integer> block_count_histogram(unsigned n) {
    std::vector<Integer> hist(n + 1, Integer(0));
    for_each_set_partition(n, [&](std::span<const std::uint8_t> rgs) {
        unsigned blocks = 0;
        for (auto v : rgs) blocks = std::max(blocks, static_cast<unsigned>(v) + 1);
        hist[blocks] += 1;
    });
    return hist;
}

}  // namespace zdqft
