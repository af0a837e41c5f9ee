#ifndef ZDQFT_COMBINATORICS_HPP
#define ZDQFT_COMBINATORICS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "zdqft/rational.hpp"

namespace zdqft {

/// Triangular table of Stirling numbers of the second kind, S(n,k) for
/// 0 <= k <= n <= n_max, filled by S(n,k) = k S(n-1,k) + S(n-1,k-1).
class StirlingTable {
  public:
    explicit StirlingTable(unsigned n_max);

    unsigned n_max() const { return n_max_; }

    /// S(n,k); zero outside 1 <= k <= n except S(0,0) = 1.
    const Integer& value(unsigned n, unsigned k) const;

    /// Row n as S(n,1) .. S(n,n).
    std::vector<Integer> row(unsigned n) const;

  private:
    unsigned n_max_;
    std::vector<std::vector<Integer>> rows_;  // rows_[n][k]
    Integer zero_;
};

StirlingTable stirling2_table(unsigned n_max);

enum class Provenance { Recurrence, Enumeration, Series };

std::string provenance_name(Provenance p);

/// An integer sequence together with how it was produced.
struct SequenceRecord {
    std::string name;
    std::vector<Integer> values;  // values[n] is the n-th term, starting at n = 0
    Provenance provenance;
};

/// B_0..B_n via Stirling row sums, cross-checked internally against the
/// binomial recurrence B_{n+1} = sum_j C(n,j) B_j.
SequenceRecord bell_numbers(unsigned n_max);

/// P_0..P_n, the number of integer partitions, by the Euler-product
/// dynamic program (P_0 = 1).
SequenceRecord partition_counts(unsigned n_max);

Integer binomial(unsigned n, unsigned k);

/// Visits every set partition of {0..n-1} exactly once, in restricted
/// growth string order. rgs[i] is the block index of element i. n <= 12.
void for_each_set_partition(unsigned n,
                            const std::function<void(std::span<const std::uint8_t>)>& visit);

/// All restricted growth strings of length n.
std::vector<std::vector<std::uint8_t>> set_partitions_enumerate(unsigned n);

/// histogram[k] = number of set partitions of an n-set with exactly k blocks.
std::vector<Integer> block_count_histogram(unsigned n);

}  // namespace zdqft

#endif
