#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "zdqft/relations.hpp"

using namespace zdqft;

namespace {

Relation chain2() {
    Relation r(2);
    r.set(0, 1);
    return r;
}

// Relabel points by a permutation.
Relation relabel(const Relation& r, const std::vector<unsigned>& perm) {
    std::vector<std::uint32_t> rows(r.size(), 0);
    for (unsigned i = 0; i < r.size(); ++i)
        for (unsigned j = 0; j < r.size(); ++j)
            if (r.related(perm[i], perm[j])) rows[i] |= 1u << j;
    return Relation::from_rows(rows);
}

std::uint64_t stabilizer_order(const Relation& r) {
    std::vector<unsigned> perm(r.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        if (relabel(r, perm) == r) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace

TEST_CASE("basic predicates") {
    const Relation identity(2);
    CHECK(identity.is_poset());
    CHECK(!is_connected(identity));

    CHECK(chain2().is_poset());
    CHECK(is_connected(chain2()));

    Relation complete(2);
    complete.set(0, 1);
    complete.set(1, 0);
    CHECK(complete.is_preorder());
    CHECK(!complete.antisymmetric());

    Relation not_transitive(3);
    not_transitive.set(0, 1);
    not_transitive.set(1, 2);
    CHECK(!not_transitive.transitive());
}

TEST_CASE("labelled preorder and poset counts") {
    // Preorders (finite topologies): totals 1, 4, 29, 355, 6942 and
    // connected 1, 3, 19, 233, 4851; posets: totals 1, 3, 19, 219, 4231 and
    // connected 1, 2, 12, 146, 3060.
    const std::vector<std::size_t> pre_total{1, 4, 29, 355, 6942};
    const std::vector<std::size_t> pre_conn{1, 3, 19, 233, 4851};
    const std::vector<std::size_t> pos_total{1, 3, 19, 219, 4231};
    const std::vector<std::size_t> pos_conn{1, 2, 12, 146, 3060};
    for (unsigned n = 1; n <= 5; ++n) {
        const auto preorders = enumerate_preorders(n);
        const auto posets = enumerate_posets(n);
        CHECK(preorders.size() == pre_total[n - 1]);
        CHECK(posets.size() == pos_total[n - 1]);
        CHECK(std::count_if(preorders.begin(), preorders.end(), is_connected) ==
              static_cast<long>(pre_conn[n - 1]));
        CHECK(std::count_if(posets.begin(), posets.end(), is_connected) ==
              static_cast<long>(pos_conn[n - 1]));
    }
}

TEST_CASE("every enumerated relation is valid") {
    for (unsigned n = 1; n <= 4; ++n) {
        for (const auto& r : enumerate_preorders(n)) CHECK(r.is_preorder());
        for (const auto& r : enumerate_posets(n)) CHECK(r.is_poset());
    }
}

TEST_CASE("enumeration caps") {
    CHECK_THROWS_AS(enumerate_preorders(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_preorders(6), std::out_of_range);
    CHECK_THROWS_AS(enumerate_posets(7, true), std::out_of_range);
}

TEST_CASE("quotient squashes mutual pairs") {
    Relation complete(2);
    complete.set(0, 1);
    complete.set(1, 0);
    const QuotientResult q = quotient(complete);
    CHECK(q.poset.size() == 1);
    CHECK(q.blocks == std::vector<std::vector<unsigned>>{{0, 1}});

    // A poset quotients to itself.
    for (const auto& p : enumerate_posets(3)) {
        const QuotientResult qp = quotient(p);
        CHECK(qp.poset == p);
        CHECK(qp.blocks.size() == 3);
    }

    Relation bad(3);
    bad.set(0, 1);
    bad.set(1, 2);
    CHECK_THROWS_AS(quotient(bad), std::domain_error);
}

TEST_CASE("quotient is idempotent and preserves connectivity") {
    for (unsigned n = 1; n <= 4; ++n)
        for (const auto& r : enumerate_preorders(n)) {
            const QuotientResult q = quotient(r);
            CHECK(q.poset.is_poset());
            CHECK(is_connected(q.poset) == is_connected(r));
            const QuotientResult q2 = quotient(q.poset);
            CHECK(q2.poset == q.poset);
            for (const auto& block : q2.blocks) CHECK(block.size() == 1);
        }
}

TEST_CASE("fiber counts over [4] match S(4,k) d_k") {
    // 1*1, 7*2, 6*12, 1*146 connected preorders with k = 1..4 blocks.
    std::vector<std::size_t> fibers(5, 0);
    for (const auto& r : enumerate_preorders(4))
        if (is_connected(r)) ++fibers[quotient(r).blocks.size()];
    CHECK(fibers[1] == 1);
    CHECK(fibers[2] == 14);
    CHECK(fibers[3] == 72);
    CHECK(fibers[4] == 146);
    CHECK(fibers[1] + fibers[2] + fibers[3] + fibers[4] == 233);
}

TEST_CASE("Stirling identity report") {
    for (unsigned n = 1; n <= 4; ++n) {
        const StirlingIdentityReport report = verify_stirling_identity(n);
        CHECK(report.pass);
        CHECK(report.connected_preorders == report.stirling_sum);
    }
    const StirlingIdentityReport r4 = verify_stirling_identity(4);
    CHECK(r4.connected_preorders == 233);
    const StirlingIdentityReport r1 = verify_stirling_identity(1);
    CHECK(r1.connected_preorders == 1);
}

TEST_CASE("unlabelled counts") {
    // Unlabelled topologies 1, 3, 9, 33 for n = 1..4 (139 at n = 5 is
    // covered by the acceptance suite); unlabelled posets 1, 2, 5, 16.
    const std::vector<std::size_t> topo{1, 3, 9, 33};
    const std::vector<std::size_t> posets{1, 2, 5, 16};
    for (unsigned n = 1; n <= 4; ++n) {
        const auto pre = enumerate_preorders(n);
        CHECK(count_unlabelled(pre) == topo[n - 1]);
        const auto pos = enumerate_posets(n);
        CHECK(count_unlabelled(pos) == posets[n - 1]);
    }
}

TEST_CASE("canonical form is idempotent and relabeling-invariant") {
    std::mt19937_64 rng(47);
    const auto preorders = enumerate_preorders(4);
    std::size_t relabelings = 0;
    for (std::size_t t = 0; t < 500; ++t) {
        const Relation& r = preorders[rng() % preorders.size()];
        const Relation canon = canonical_relation(r);
        CHECK(canonical_relation(canon) == canon);
        std::vector<unsigned> perm(r.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_relation(relabel(r, perm)) == canon);
        ++relabelings;
    }
    CHECK(relabelings == 500);
}

TEST_CASE("orbit-stabilizer accounts for every labelled structure") {
    for (unsigned n = 1; n <= 4; ++n) {
        const auto preorders = enumerate_preorders(n);
        std::set<Relation> reps;
        for (const auto& r : preorders) reps.insert(canonical_relation(r));
        std::uint64_t total = 0;
        const std::uint64_t n_factorial = factorial(n).get_ui();
        for (const auto& rep : reps) total += n_factorial / stabilizer_order(rep);
        CHECK(total == preorders.size());
    }
}

TEST_CASE("connected totals cross-check") {
    const ConnectedTotalsReport report = connected_totals_cross_check(4);
    CHECK(report.pass);
    CHECK(report.poset_total == std::vector<std::uint64_t>{1, 1, 3, 19, 219});
    CHECK(report.preorder_total == std::vector<std::uint64_t>{1, 1, 4, 29, 355});
    CHECK(report.poset_total_from_exp == report.poset_total);
    CHECK(report.preorder_total_from_exp == report.preorder_total);
    const ConnectedTotalsReport tiny = connected_totals_cross_check(1);
    CHECK(tiny.pass);
    CHECK(tiny.preorder_connected[1] == 1);
    CHECK(tiny.preorder_total[1] == 1);
}
