// Acceptance suite: one line per criterion, all comparisons exact.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "zdqft/combinatorics.hpp"
#include "zdqft/engine.hpp"
#include "zdqft/relations.hpp"
#include "zdqft/series.hpp"
#include "zdqft/wick.hpp"

using namespace zdqft;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

// 1. Stirling rows: n! [eps^n] Z of the partitions model equals
//    sum_k S(n,k) g^k for n <= 30.
bool stirling_model(std::string& detail) {
    const unsigned N = 30;
    const PartitionSeries z = partition_function(builtin_model("partitions"), N, N);
    const StirlingTable table(N);
    Integer n_factorial = 1;
    for (unsigned n = 1; n <= N; ++n) {
        n_factorial *= n;
        for (unsigned k = 1; k <= n; ++k)
            if (z.coeff(n, k) * Rational(n_factorial) != Rational(table.value(n, k))) {
                detail = "mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k);
                return false;
            }
    }
    detail = "all rows n <= 30 match the recurrence table";
    return true;
}

// 2. Bell squared: n! [eps^n] Z = B_n^2 for n <= 200.
bool bell_squared(std::string& detail) {
    const unsigned N = 200;
    const PartitionSeries z = partition_function(builtin_model("bell-squared"), N, 0);
    const SequenceRecord bell = bell_numbers(N);
    Integer n_factorial = 1;
    for (unsigned n = 0; n <= N; ++n) {
        if (n > 0) n_factorial *= n;
        if (z.coeff(n, 0) * Rational(n_factorial) !=
            Rational(bell.values[n] * bell.values[n])) {
            detail = "mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    detail = "n! [eps^n] Z = B_n^2 for n <= 200";
    return true;
}

// 3. phi4 symmetry numbers 1/8 and 35/384, oracle-checked.
bool phi4_symmetry(std::string& detail) {
    const ModelSpec phi4 = builtin_model("phi4");
    const PartitionSeries z = partition_function(phi4, 4, 2);
    const PartitionSeries f = free_energy(z);
    bool ok = z.coeff(2, 1) == Rational(1, 8) && f.coeff(2, 1) == Rational(1, 8) &&
              z.coeff(4, 2) == Rational(35, 384) &&
              oracle_coefficient(phi4, 2, 1) == Rational(1, 8) &&
              oracle_coefficient(phi4, 4, 2) == Rational(35, 384);
    detail = "[eps^2 g] Z = " + z.coeff(2, 1).str() + ", [eps^4 g^2] Z = " + z.coeff(4, 2).str();
    return ok;
}

// 4. Engine vs Wick oracle on 20 seeded random models.
bool oracle_agreement(std::string& detail) {
    std::size_t compared = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const ModelSpec model = random_finite_model(seed);
        const PartitionSeries z = partition_function(model, 6, 6);
        for (unsigned i = 0; i <= 6; ++i)
            for (unsigned j = 0; j <= 6; ++j) {
                Rational oracle;
                try {
                    oracle = oracle_coefficient(model, i, j);
                } catch (const std::out_of_range&) {
                    continue;  // coefficient needs more than 8 legs
                }
                ++compared;
                if (z.coeff(i, j) != oracle) {
                    detail = "seed " + std::to_string(seed) + " disagrees at eps^" +
                             std::to_string(i) + " g^" + std::to_string(j);
                    return false;
                }
            }
    }
    detail = "20 models, " + std::to_string(compared) + " coefficients compared";
    return true;
}

// 5. Unlabelled diagram counts 1, 1, 4, 10, 33 with symmetry sums B_n^2/n!,
//    after validating the closed-form |Aut| against the leg-level count.
bool diagram_counts(std::string& detail) {
    const ModelSpec model = builtin_model("bell-squared");
    std::size_t validated = 0;
    for (const auto& datum : enumerate_diagrams_by_legs(model, 5)) {
        if (aut_order(datum.diagram) != leg_level_aut_order(datum.diagram)) {
            detail = "closed-form |Aut| disagrees with leg-level count";
            return false;
        }
        ++validated;
    }
    const std::vector<std::size_t> expected{1, 1, 4, 10, 33};
    const SequenceRecord bell = bell_numbers(4);
    for (unsigned n = 0; n <= 4; ++n) {
        const auto diagrams = enumerate_diagrams(model, n);
        if (diagrams.size() != expected[n]) {
            detail = "count at degree " + std::to_string(n) + " is " +
                     std::to_string(diagrams.size());
            return false;
        }
        Rational sum(0);
        for (const auto& d : diagrams) sum += d.symmetry_number;
        if (sum != Rational(bell.values[n] * bell.values[n], factorial(n))) {
            detail = "symmetry sum at degree " + std::to_string(n) + " is " + sum.str();
            return false;
        }
    }
    detail = "counts 1,1,4,10,33; |Aut| validated on " + std::to_string(validated) +
             " diagrams with <= 5 legs";
    return true;
}

// 6. t_n = sum_k S(n,k) d_k for n = 1..5, fibers included.
bool topology_identity(std::string& detail) {
    const std::vector<std::uint64_t> t{1, 3, 19, 233, 4851};
    const std::vector<std::uint64_t> d{1, 2, 12, 146, 3060};
    std::ostringstream os;
    for (unsigned n = 1; n <= 5; ++n) {
        const StirlingIdentityReport report = verify_stirling_identity(n);
        if (!report.pass || report.connected_preorders != t[n - 1]) {
            detail = "identity fails at n=" + std::to_string(n);
            return false;
        }
        for (const auto& fiber : report.fibers)
            if (fiber.connected_posets != d[fiber.k - 1]) {
                detail = "d_" + std::to_string(fiber.k) + " off at n=" + std::to_string(n);
                return false;
            }
        if (n == 4) {
            os << "t_4: ";
            for (const auto& fiber : report.fibers)
                os << fiber.stirling << "*" << fiber.connected_posets
                   << (fiber.k < 4 ? " + " : " = ");
            os << report.connected_preorders << "; ";
        }
    }
    os << "t = (1,3,19,233,4851)";
    detail = os.str();
    return true;
}

// 7. Unlabelled topologies 1, 3, 9, 33, 139.
bool unlabelled_topologies(std::string& detail) {
    const std::vector<std::size_t> expected{1, 3, 9, 33, 139};
    for (unsigned n = 1; n <= 5; ++n) {
        const auto preorders = enumerate_preorders(n);
        const std::size_t count = count_unlabelled(preorders);
        if (count != expected[n - 1]) {
            detail = "n=" + std::to_string(n) + " gives " + std::to_string(count);
            return false;
        }
    }
    detail = "counts 1, 3, 9, 33, 139 for n = 1..5";
    return true;
}

// 8. Exponential formula: connected counts exponentiate to totals, and
//    exp(ln Z) = Z for every builtin model at order 10.
bool exponential_formula(std::string& detail) {
    const ConnectedTotalsReport report = connected_totals_cross_check(4);
    if (!report.pass || report.poset_total != std::vector<std::uint64_t>{1, 1, 3, 19, 219} ||
        report.preorder_total != std::vector<std::uint64_t>{1, 1, 4, 29, 355}) {
        detail = "connected/total cross-check failed";
        return false;
    }
    for (const auto& name : builtin_model_names()) {
        const PartitionSeries z = partition_function(builtin_model(name), 10, 10);
        if (!(exp_series(free_energy(z)) == z)) {
            detail = "exp(ln Z) != Z for " + name;
            return false;
        }
    }
    detail = "poset totals (1,1,3,19,219), preorder totals (1,1,4,29,355), exp(ln Z) = Z";
    return true;
}

// 9. Property suites: exp/log round trips, canonical-form idempotence,
//    quotient idempotence and connectivity preservation.
bool property_suites(std::string& detail) {
    std::mt19937_64 rng(2026);

    for (int trial = 0; trial < 100; ++trial) {
        const unsigned order = 1 + static_cast<unsigned>(rng() % 12);
        TruncSeries<Rational> a(order);
        for (unsigned n = 1; n <= order; ++n)
            a.set_coeff(n, Rational(static_cast<long>(rng() % 19) - 9,
                                    1 + static_cast<long>(rng() % 9)));
        if (!(log(exp(a)) == a)) {
            detail = "exp/log round trip failed";
            return false;
        }
    }

    const auto diagrams = enumerate_diagrams_by_legs(builtin_model("bell-squared"), 5);
    const auto preorders = enumerate_preorders(4);
    for (int trial = 0; trial < 500; ++trial) {
        // Alternate between diagram and relation relabelings.
        if (trial % 2 == 0) {
            const auto& canon = diagrams[rng() % diagrams.size()].diagram;
            if (canon.incidence.empty()) continue;
            const std::size_t rows = canon.incidence.size(), cols = canon.incidence[0].size();
            std::vector<std::size_t> rp(rows), cp(cols);
            std::iota(rp.begin(), rp.end(), 0);
            std::iota(cp.begin(), cp.end(), 0);
            std::shuffle(rp.begin(), rp.end(), rng);
            std::shuffle(cp.begin(), cp.end(), rng);
            Diagram shuffled;
            shuffled.incidence.assign(rows, std::vector<unsigned>(cols));
            shuffled.line_arities.resize(rows);
            shuffled.vertex_arities.resize(cols);
            for (std::size_t i = 0; i < rows; ++i) {
                shuffled.line_arities[i] = canon.line_arities[rp[i]];
                for (std::size_t j = 0; j < cols; ++j)
                    shuffled.incidence[i][j] = canon.incidence[rp[i]][cp[j]];
            }
            for (std::size_t j = 0; j < cols; ++j)
                shuffled.vertex_arities[j] = canon.vertex_arities[cp[j]];
            if (!(canonical_form(shuffled) == canon) || !(canonical_form(canon) == canon)) {
                detail = "diagram canonical form not relabeling-invariant";
                return false;
            }
        } else {
            const Relation& r = preorders[rng() % preorders.size()];
            std::vector<unsigned> perm(r.size());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<std::uint32_t> rows(r.size(), 0);
            for (unsigned i = 0; i < r.size(); ++i)
                for (unsigned j = 0; j < r.size(); ++j)
                    if (r.related(perm[i], perm[j])) rows[i] |= 1u << j;
            const Relation relabeled = Relation::from_rows(rows);
            const Relation canon = canonical_relation(r);
            if (!(canonical_relation(relabeled) == canon) ||
                !(canonical_relation(canon) == canon)) {
                detail = "relation canonical form not relabeling-invariant";
                return false;
            }
        }
    }

    for (unsigned n = 1; n <= 4; ++n)
        for (const auto& r : enumerate_preorders(n)) {
            const QuotientResult q = quotient(r);
            if (is_connected(q.poset) != is_connected(r)) {
                detail = "quotient changed connectivity";
                return false;
            }
            const QuotientResult q2 = quotient(q.poset);
            for (const auto& block : q2.blocks)
                if (block.size() != 1) {
                    detail = "quotient not idempotent";
                    return false;
                }
        }

    detail = "100 exp/log round trips, 500 relabelings, exhaustive quotients n <= 4";
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"Stirling model rows (n <= 30)", stirling_model},
        {"bell-squared coefficients (n <= 200)", bell_squared},
        {"phi4 symmetry numbers", phi4_symmetry},
        {"engine-oracle agreement (20 seeded models)", oracle_agreement},
        {"unlabelled diagram counts and |Aut| validation", diagram_counts},
        {"topology-poset Stirling identity (n <= 5)", topology_identity},
        {"unlabelled topology counts (n <= 5)", unlabelled_topologies},
        {"exponential formula", exponential_formula},
        {"property suites", property_suites},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::printf("%s  criterion %zu: %s [%lld ms] %s\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].name.c_str(), static_cast<long long>(ms), detail.c_str());
        if (!ok) ++failures;
    }
    return failures;
}
