#ifndef ZDQFT_RELATIONS_HPP
#define ZDQFT_RELATIONS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zdqft/rational.hpp"

namespace zdqft {

/// Reflexive binary relation on n labelled points, one bitmask row per
/// point: bit j of row i set means i <= j. Preorders (equivalently finite
/// topologies) are the transitive ones; posets additionally antisymmetric.
class Relation {
  public:
    /// Identity (diagonal-only) relation.
    explicit Relation(unsigned n);

    static Relation from_rows(std::vector<std::uint32_t> rows);

    unsigned size() const { return static_cast<unsigned>(rows_.size()); }
    std::uint32_t row(unsigned i) const { return rows_[i]; }
    bool related(unsigned i, unsigned j) const { return (rows_[i] >> j) & 1u; }
    void set(unsigned i, unsigned j) { rows_[i] |= (1u << j); }

    bool reflexive() const;
    bool transitive() const;
    bool antisymmetric() const;
    bool is_preorder() const { return reflexive() && transitive(); }
    bool is_poset() const { return is_preorder() && antisymmetric(); }

    /// Rows as a binary string per point, e.g. "110", highest point last.
    std::vector<std::string> row_strings() const;

    friend bool operator==(const Relation& a, const Relation& b) { return a.rows_ == b.rows_; }
    friend bool operator<(const Relation& a, const Relation& b) { return a.rows_ < b.rows_; }

  private:
    std::vector<std::uint32_t> rows_;
};

/// True when the symmetrized comparability graph has a single component.
bool is_connected(const Relation& r);

/// All preorders on n labelled points, by filtering every off-diagonal bit
/// pattern for transitivity. n <= 5 by default; n = 6 costs 2^30 candidates
/// and is allowed only with allow_large (prints a runtime warning).
std::vector<Relation> enumerate_preorders(unsigned n, bool allow_large = false);

/// The antisymmetric preorders on n labelled points.
std::vector<Relation> enumerate_posets(unsigned n, bool allow_large = false);

struct QuotientResult {
    Relation poset;                             // induced relation on the blocks
    std::vector<std::vector<unsigned>> blocks;  // mutual-relation classes, by least element
};

/// Squashes mutual-relation classes of a preorder to single points; the
/// induced block relation is a poset and has the same connectivity.
QuotientResult quotient(const Relation& preorder);

/// Lexicographically minimal row table over all simultaneous point
/// relabelings; equal exactly on isomorphic relations.
Relation canonical_relation(const Relation& r);

/// Number of isomorphism classes in the list.
std::size_t count_unlabelled(std::span<const Relation> structures);

/// Checks t_n = sum_k S(n,k) d_k three ways: connected preorders counted
/// directly, the Stirling-weighted poset counts, and the per-k quotient
/// fibers (each fiber must have exactly S(n,k) d_k members).
struct StirlingIdentityReport {
    unsigned n = 0;
    std::uint64_t connected_preorders = 0;  // t_n
    std::uint64_t stirling_sum = 0;         // sum_k S(n,k) d_k
    struct Fiber {
        unsigned k;
        std::uint64_t fiber_count;        // connected preorders whose quotient has k blocks
        std::uint64_t stirling;           // S(n,k)
        std::uint64_t connected_posets;   // d_k
    };
    std::vector<Fiber> fibers;
    bool pass = false;
};

StirlingIdentityReport verify_stirling_identity(unsigned n);

/// Packs connected counts into an EGF, exponentiates, and compares with the
/// directly-counted totals, for posets and for preorders.
struct ConnectedTotalsReport {
    unsigned n_max = 0;
    std::vector<std::uint64_t> poset_connected, poset_total, poset_total_from_exp;
    std::vector<std::uint64_t> preorder_connected, preorder_total, preorder_total_from_exp;
    bool pass = false;
};

ConnectedTotalsReport connected_totals_cross_check(unsigned n_max);

}  // namespace zdqft

#endif
