#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "zdqft/combinatorics.hpp"

using namespace zdqft;

namespace {

// Brute-force integer partition count: non-increasing summand lists.
Integer count_partitions_brute(unsigned n, unsigned max_part) {
    if (n == 0) return 1;
    Integer total = 0;
    for (unsigned p = std::min(n, max_part); p >= 1; --p) total += count_partitions_brute(n - p, p);
    return total;
}

}  // namespace

TEST_CASE("Stirling table values") {
    const StirlingTable t(10);
    CHECK(t.value(1, 1) == 1);
    CHECK(t.value(2, 1) == 1);
    CHECK(t.value(2, 2) == 1);
    CHECK(t.value(3, 2) == 3);
    CHECK(t.value(3, 3) == 1);
    for (unsigned n = 1; n <= 10; ++n) {
        CHECK(t.value(n, 1) == 1);
        CHECK(t.value(n, n) == 1);
    }
    CHECK(t.row(4) == std::vector<Integer>{1, 7, 6, 1});
}

TEST_CASE("Stirling row sums are the Bell numbers") {
    const StirlingTable t(10);
    const SequenceRecord bell = bell_numbers(10);
    for (unsigned n = 1; n <= 10; ++n) {
        Integer sum = 0;
        for (unsigned k = 1; k <= n; ++k) sum += t.value(n, k);
        CHECK(sum == bell.values[n]);
    }
}

TEST_CASE("Bell numbers") {
    const SequenceRecord bell = bell_numbers(10);
    const std::vector<long> expected{1, 1, 2, 5, 15, 52, 203};
    for (unsigned n = 0; n < expected.size(); ++n) CHECK(bell.values[n] == expected[n]);
    CHECK(bell.provenance == Provenance::Recurrence);

    // Independent count: enumerate all set partitions of 10 elements.
    std::size_t count = 0;
    for_each_set_partition(10, [&](auto) { ++count; });
    CHECK(bell.values[10] == 115975);
    CHECK(count == 115975);
}

TEST_CASE("integer partition counts") {
    const SequenceRecord p = partition_counts(25);
    const std::vector<long> expected{1, 1, 2, 3, 5, 7, 11};
    for (unsigned n = 0; n < expected.size(); ++n) CHECK(p.values[n] == expected[n]);
    CHECK(p.values[20] == 627);
    for (unsigned n = 0; n <= 25; ++n) CHECK(p.values[n] == count_partitions_brute(n, n));
}

TEST_CASE("set partition enumeration") {
    CHECK(set_partitions_enumerate(1).size() == 1);
    CHECK(set_partitions_enumerate(3).size() == 5);
    CHECK(set_partitions_enumerate(6).size() == 203);

    const auto hist3 = block_count_histogram(3);
    CHECK(hist3[1] == 1);
    CHECK(hist3[2] == 3);
    CHECK(hist3[3] == 1);

    // Restricted growth: every string valid, no duplicates, lexicographic.
    const auto all = set_partitions_enumerate(5);
    std::set<std::vector<std::uint8_t>> unique(all.begin(), all.end());
    CHECK(unique.size() == all.size());
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (const auto& rgs : all) {
        CHECK(rgs[0] == 0);
        unsigned max_seen = 0;
        for (unsigned i = 1; i < rgs.size(); ++i) {
            CHECK(rgs[i] <= max_seen + 1);
            max_seen = std::max(max_seen, static_cast<unsigned>(rgs[i]));
        }
    }

    // Histogram rows reproduce the Stirling table.
    const StirlingTable t(8);
    for (unsigned n = 1; n <= 8; ++n) {
        const auto hist = block_count_histogram(n);
        for (unsigned k = 1; k <= n; ++k) CHECK(hist[k] == t.value(n, k));
    }

    CHECK_THROWS_AS(set_partitions_enumerate(13), std::out_of_range);
}

TEST_CASE("three-way Bell agreement") {
    const SequenceRecord bell = bell_numbers(12);
    for (unsigned n = 0; n <= 12; ++n) {
        std::size_t count = 0;
        for_each_set_partition(n, [&](auto) { ++count; });
        CHECK(Integer(count) == bell.values[n]);
    }
}

TEST_CASE("binomial") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 7) == 0);
}
