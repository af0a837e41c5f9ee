#ifndef ZDQFT_WICK_HPP
#define ZDQFT_WICK_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "zdqft/bipoly.hpp"
#include "zdqft/model.hpp"

namespace zdqft {

/// An unlabelled vacuum diagram: line nodes with arities m_i, vertex nodes
/// with arities n_j, and an incidence matrix e[i][j] counting how many legs
/// of line i attach to vertex j. Row sums equal the line arities, column
/// sums the vertex arities; every leg is attached.
struct Diagram {
    std::vector<unsigned> line_arities;
    std::vector<unsigned> vertex_arities;
    std::vector<std::vector<unsigned>> incidence;

    unsigned total_legs() const;
    bool connected() const;  // empty diagram counts as not connected

    friend bool operator==(const Diagram& a, const Diagram& b) {
        return a.incidence == b.incidence;
    }
};

/// Representative of the diagram's equivalence class under independent
/// reordering of line nodes and vertex nodes. Two diagrams are equal exactly
/// when their canonical forms have equal incidence matrices.
Diagram canonical_form(const Diagram& d);

/// |Aut| of the leg-level structure, via the closed form
///   (number of incidence-matrix automorphism pairs) * prod_ij e_ij!.
std::uint64_t aut_order(const Diagram& d);

/// |Aut| counted literally: permutations of legs that respect the grouping
/// of legs into lines, whose conjugate by the leg-slot matching respects the
/// grouping of slots into vertices. Exhaustive over all legs! permutations;
/// usable up to 8 legs, meant as the validation oracle for aut_order.
std::uint64_t leg_level_aut_order(const Diagram& d);

struct SymmetryDatum {
    Diagram diagram;              // canonical form
    std::uint64_t aut_order = 1;
    Rational symmetry_number;     // 1 / aut_order
    bool connected = false;
};

/// Every unlabelled diagram of the model with at most max_legs legs
/// (including the empty diagram). max_legs <= 8.
std::vector<SymmetryDatum> enumerate_diagrams_by_legs(const ModelSpec& model, unsigned max_legs);

/// Every unlabelled diagram whose amplitude product has eps degree exactly
/// eps_degree. Requires monomial amplitudes so that each diagram carries a
/// single well-defined degree.
std::vector<SymmetryDatum> enumerate_diagrams(const ModelSpec& model, unsigned eps_degree);

/// Independent recomputation of [eps^i g^j] Z as
/// sum over diagrams of symmetry_number * amplitude product.
Rational oracle_coefficient(const ModelSpec& model, unsigned eps_degree, unsigned g_degree);

std::vector<SymmetryDatum> connected_filter(std::span<const SymmetryDatum> data);

/// prod_i L_{m_i} * prod_j V_{n_j} for the diagram's arity multisets.
BiPoly amplitude_product(const ModelSpec& model, const Diagram& d);

}  // namespace zdqft

#endif
