#include "zdqft/wick.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "zdqft/engine.hpp"

namespace zdqft {

namespace {

using Matrix = std::vector<std::vector<unsigned>>;

constexpr unsigned kLegCap = 8;

std::vector<unsigned> row_sums(const Matrix& m) {
    std::vector<unsigned> out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        out[i] = std::accumulate(m[i].begin(), m[i].end(), 0u);
    return out;
}

std::vector<unsigned> col_sums(const Matrix& m) {
    if (m.empty()) return {};
    std::vector<unsigned> out(m[0].size(), 0);
    for (const auto& row : m)
        for (std::size_t j = 0; j < row.size(); ++j) out[j] += row[j];
    return out;
}

Matrix transpose(const Matrix& m) {
    if (m.empty()) return {};
    Matrix out(m[0].size(), std::vector<unsigned>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
    return out;
}

// Reorders rows so that row sums are non-increasing (stable), same for
// columns. All canonicalization and automorphism counting assumes this
// grouped layout.
Matrix normalize_layout(const Matrix& m) {
    if (m.empty()) return {};
    std::vector<unsigned> rs = row_sums(m), cs = col_sums(m);
    std::vector<std::size_t> ri(m.size()), ci(cs.size());
    std::iota(ri.begin(), ri.end(), 0);
    std::iota(ci.begin(), ci.end(), 0);
    std::stable_sort(ri.begin(), ri.end(), [&](auto a, auto b) { return rs[a] > rs[b]; });
    std::stable_sort(ci.begin(), ci.end(), [&](auto a, auto b) { return cs[a] > cs[b]; });
    Matrix out(m.size(), std::vector<unsigned>(cs.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j) out[i][j] = m[ri[i]][ci[j]];
    return out;
}

// Contiguous groups of equal values in a non-increasing sequence.
std::vector<std::pair<std::size_t, std::size_t>> groups_of(const std::vector<unsigned>& sums) {
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= sums.size(); ++i)
        if (i == sums.size() || sums[i] != sums[start]) {
            groups.emplace_back(start, i);
            start = i;
        }
    return groups;
}

std::uint64_t perm_count(const std::vector<std::pair<std::size_t, std::size_t>>& groups) {
    std::uint64_t n = 1;
    for (auto [a, b] : groups)
        for (std::size_t i = 2; i <= b - a; ++i) n *= i;
    return n;
}

// Calls cb for every permutation sigma (as an index map) that permutes
// positions only within the given groups.
template <typename Cb>
void for_each_group_perm(std::size_t size,
                         const std::vector<std::pair<std::size_t, std::size_t>>& groups,
                         const Cb& cb) {
    std::vector<std::size_t> sigma(size);
    std::iota(sigma.begin(), sigma.end(), 0);
    auto rec = [&](auto&& self, std::size_t g) -> void {
        if (g == groups.size()) {
            cb(sigma);
            return;
        }
        auto [a, b] = groups[g];
        std::vector<std::size_t> idx(sigma.begin() + a, sigma.begin() + b);
        std::sort(idx.begin(), idx.end());
        do {
            std::copy(idx.begin(), idx.end(), sigma.begin() + a);
            self(self, g + 1);
        } while (std::next_permutation(idx.begin(), idx.end()));
    };
    rec(rec, 0);
}

Matrix apply_row_perm(const Matrix& m, const std::vector<std::size_t>& sigma) {
    Matrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = m[sigma[i]];
    return out;
}

Matrix sorted_columns_desc(const Matrix& m) {
    Matrix cols = transpose(m);
    std::sort(cols.begin(), cols.end(), std::greater<>());
    return transpose(cols);
}

// Minimum of sorted_columns_desc(sigma M) over all row-class permutations;
// a full invariant of the (row perm, column perm) orbit for grouped
// matrices. Applied to whichever side has the smaller permutation count.
Matrix min_over_row_perms(const Matrix& m, const std::vector<unsigned>& sums) {
    Matrix best;
    for_each_group_perm(m.size(), groups_of(sums), [&](const std::vector<std::size_t>& sigma) {
        Matrix candidate = sorted_columns_desc(apply_row_perm(m, sigma));
        if (best.empty() || candidate < best) best = std::move(candidate);
    });
    return best;
}

Diagram diagram_from_matrix(Matrix m) {
    Diagram d;
    d.line_arities = row_sums(m);
    d.vertex_arities = col_sums(m);
    d.incidence = std::move(m);
    return d;
}

}  // namespace

unsigned Diagram::total_legs() const {
    return std::accumulate(line_arities.begin(), line_arities.end(), 0u);
}

bool Diagram::connected() const {
    const std::size_t rows = incidence.size();
    const std::size_t cols = rows == 0 ? 0 : incidence[0].size();
    if (rows + cols == 0) return false;
    // Union-find over line nodes [0, rows) and vertex nodes [rows, rows+cols).
    std::vector<std::size_t> parent(rows + cols);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (incidence[i][j] > 0) parent[find(i)] = find(rows + j);
    const std::size_t root = find(0);
    for (std::size_t x = 1; x < rows + cols; ++x)
        if (find(x) != root) return false;
    return true;
}

Diagram canonical_form(const Diagram& d) {
    if (d.incidence.empty()) return Diagram{};
    Matrix m = normalize_layout(d.incidence);
    const std::vector<unsigned> rs = row_sums(m), cs = col_sums(m);
    Matrix best;
    if (perm_count(groups_of(rs)) <= perm_count(groups_of(cs)))
        best = min_over_row_perms(m, rs);
    else
        best = transpose(min_over_row_perms(transpose(m), cs));
    return diagram_from_matrix(std::move(best));
}

std::uint64_t aut_order(const Diagram& d) {
    if (d.incidence.empty()) return 1;
    Matrix m = normalize_layout(d.incidence);
    const std::vector<unsigned> rs = row_sums(m), cs = col_sums(m);

    // Count pairs (sigma, tau) of node permutations fixing the matrix: run
    // sigma over the cheaper side; for each sigma the number of valid tau is
    // the product of multiplicities! of identical columns, provided the
    // column multisets agree.
    const bool rows_cheaper = perm_count(groups_of(rs)) <= perm_count(groups_of(cs));
    const Matrix side = rows_cheaper ? m : transpose(m);
    const std::vector<unsigned>& sums = rows_cheaper ? rs : cs;

    Matrix ref_cols = transpose(side);
    std::sort(ref_cols.begin(), ref_cols.end());
    std::uint64_t tau_count = 1;
    for (std::size_t j = 0; j < ref_cols.size();) {
        std::size_t e = j;
        while (e < ref_cols.size() && ref_cols[e] == ref_cols[j]) ++e;
        for (std::size_t i = 2; i <= e - j; ++i) tau_count *= i;
        j = e;
    }

    std::uint64_t pairs = 0;
    for_each_group_perm(side.size(), groups_of(sums), [&](const std::vector<std::size_t>& sigma) {
        Matrix cols = transpose(apply_row_perm(side, sigma));
        std::sort(cols.begin(), cols.end());
        if (cols == ref_cols) pairs += tau_count;
    });

    std::uint64_t legs_factor = 1;
    for (const auto& row : m)
        for (unsigned e : row)
            for (unsigned i = 2; i <= e; ++i) legs_factor *= i;
    return pairs * legs_factor;
}

std::uint64_t leg_level_aut_order(const Diagram& d) {
    const unsigned k = d.total_legs();
    if (k > kLegCap) throw std::out_of_range("leg_level_aut_order: more than 8 legs");
    if (k == 0) return 1;

    const std::size_t rows = d.incidence.size();
    const std::size_t cols = d.incidence[0].size();

    std::vector<unsigned> line_of_leg(k), vertex_of_slot(k);
    std::vector<unsigned> slot_of_leg(k), leg_of_slot(k);
    {
        // Legs numbered line by line, slots vertex by vertex; the reference
        // matching sends the e_ij legs of line i to slots of vertex j in order.
        std::vector<unsigned> leg_base(rows, 0), slot_base(cols, 0);
        unsigned acc = 0;
        for (std::size_t i = 0; i < rows; ++i) {
            leg_base[i] = acc;
            for (unsigned t = 0; t < d.line_arities[i]; ++t) line_of_leg[acc + t] = i;
            acc += d.line_arities[i];
        }
        acc = 0;
        for (std::size_t j = 0; j < cols; ++j) {
            slot_base[j] = acc;
            for (unsigned t = 0; t < d.vertex_arities[j]; ++t) vertex_of_slot[acc + t] = j;
            acc += d.vertex_arities[j];
        }
        std::vector<unsigned> leg_cursor = leg_base, slot_cursor = slot_base;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                for (unsigned t = 0; t < d.incidence[i][j]; ++t) {
                    const unsigned leg = leg_cursor[i]++;
                    const unsigned slot = slot_cursor[j]++;
                    slot_of_leg[leg] = slot;
                    leg_of_slot[slot] = leg;
                }
    }

    std::vector<unsigned> p(k);
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t count = 0;
    std::vector<unsigned> q(k);
    do {
        bool ok = true;
        // p must map every line's legs onto one equal-arity line's legs.
        for (std::size_t i = 0; i < rows && ok; ++i) {
            unsigned target = rows;
            unsigned seen = 0;
            for (unsigned leg = 0; leg < k; ++leg) {
                if (line_of_leg[leg] != i) continue;
                const unsigned t = line_of_leg[p[leg]];
                if (seen == 0) target = t;
                if (t != target) {
                    ok = false;
                    break;
                }
                ++seen;
            }
            if (ok && d.line_arities[target] != d.line_arities[i]) ok = false;
        }
        if (!ok) continue;
        // Conjugate by the matching and demand the same on the vertex side.
        for (unsigned s = 0; s < k; ++s) q[s] = slot_of_leg[p[leg_of_slot[s]]];
        for (std::size_t j = 0; j < cols && ok; ++j) {
            unsigned target = cols;
            unsigned seen = 0;
            for (unsigned slot = 0; slot < k; ++slot) {
                if (vertex_of_slot[slot] != j) continue;
                const unsigned t = vertex_of_slot[q[slot]];
                if (seen == 0) target = t;
                if (t != target) {
                    ok = false;
                    break;
                }
                ++seen;
            }
            if (ok && d.vertex_arities[target] != d.vertex_arities[j]) ok = false;
        }
        if (ok) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

namespace {

// Non-increasing multisets drawn from `arities` (ascending) summing to total.
void multisets_rec(const std::vector<unsigned>& arities, unsigned total, unsigned max_part,
                   std::vector<unsigned>& current, std::vector<std::vector<unsigned>>& out) {
    if (total == 0) {
        out.push_back(current);
        return;
    }
    for (auto it = arities.rbegin(); it != arities.rend(); ++it) {
        const unsigned a = *it;
        if (a > max_part || a > total) continue;
        current.push_back(a);
        multisets_rec(arities, total - a, a, current, out);
        current.pop_back();
    }
}

std::vector<std::vector<unsigned>> arity_multisets(const std::vector<unsigned>& arities,
                                                   unsigned total) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> current;
    multisets_rec(arities, total, total, current, out);
    return out;
}

// All row vectors v with sum = total, v[j] <= caps[j], and (when bounded)
// v <= bound lexicographically; rows within an equal-arity class are forced
// non-increasing so each diagram is generated only a few times.
void row_fill_rec(std::size_t j, unsigned remaining, bool tight, const std::vector<unsigned>& caps,
                  const std::vector<unsigned>& cap_suffix, const std::vector<unsigned>* bound,
                  std::vector<unsigned>& row, const std::function<void()>& emit) {
    if (j == caps.size()) {
        if (remaining == 0) emit();
        return;
    }
    if (remaining > cap_suffix[j]) return;
    unsigned hi = std::min(caps[j], remaining);
    if (tight && bound) hi = std::min(hi, (*bound)[j]);
    for (unsigned v = hi + 1; v-- > 0;) {
        row[j] = v;
        row_fill_rec(j + 1, remaining - v, tight && bound && v == (*bound)[j], caps, cap_suffix,
                     bound, row, emit);
    }
    row[j] = 0;
}

void matrices_rec(const std::vector<unsigned>& lambda, const std::vector<unsigned>& mu,
                  std::size_t i, std::vector<unsigned>& caps, Matrix& m,
                  const std::function<void(const Matrix&)>& emit) {
    if (i == lambda.size()) {
        emit(m);
        return;
    }
    std::vector<unsigned> cap_suffix(caps.size() + 1, 0);
    for (std::size_t j = caps.size(); j-- > 0;) cap_suffix[j] = cap_suffix[j + 1] + caps[j];
    const std::vector<unsigned>* bound =
        (i > 0 && lambda[i] == lambda[i - 1]) ? &m[i - 1] : nullptr;
    std::vector<unsigned> row(mu.size(), 0);
    row_fill_rec(0, lambda[i], bound != nullptr, caps, cap_suffix, bound, row, [&]() {
        m[i] = row;
        for (std::size_t j = 0; j < caps.size(); ++j) caps[j] -= row[j];
        matrices_rec(lambda, mu, i + 1, caps, m, emit);
        for (std::size_t j = 0; j < caps.size(); ++j) caps[j] += row[j];
    });
}

}  // namespace

std::vector<SymmetryDatum> enumerate_diagrams_by_legs(const ModelSpec& model, unsigned max_legs) {
    if (max_legs > kLegCap)
        throw std::out_of_range("enumerate_diagrams_by_legs: enumeration capped at 8 legs");

    std::vector<SymmetryDatum> out;
    out.push_back(SymmetryDatum{Diagram{}, 1, Rational(1), false});

    for (unsigned k = 1; k <= max_legs; ++k) {
        const auto line_arities = model.line_arities_up_to(k);
        const auto vertex_arities = model.vertex_arities_up_to(k);
        if (line_arities.empty() || vertex_arities.empty()) continue;
        for (const auto& lambda : arity_multisets(line_arities, k)) {
            for (const auto& mu : arity_multisets(vertex_arities, k)) {
                std::set<Matrix> seen;
                std::vector<unsigned> caps = mu;
                Matrix m(lambda.size(), std::vector<unsigned>(mu.size(), 0));
                matrices_rec(lambda, mu, 0, caps, m, [&](const Matrix& full) {
                    Diagram canon = canonical_form(diagram_from_matrix(full));
                    if (!seen.insert(canon.incidence).second) return;
                    const std::uint64_t aut = aut_order(canon);
                    const bool conn = canon.connected();
                    out.push_back(SymmetryDatum{std::move(canon), aut,
                                                Rational(1L, static_cast<long>(aut)), conn});
                });
            }
        }
    }
    return out;
}

std::vector<SymmetryDatum> enumerate_diagrams(const ModelSpec& model, unsigned eps_degree) {
    const unsigned max_legs = legs_bound(model, eps_degree, std::nullopt);
    if (max_legs > kLegCap)
        throw std::out_of_range("enumerate_diagrams: degree needs more than 8 legs");
    std::vector<SymmetryDatum> out;
    for (auto& datum : enumerate_diagrams_by_legs(model, max_legs)) {
        const BiPoly amp = amplitude_product(model, datum.diagram);
        if (!amp.is_monomial() && !amp.is_zero())
            throw std::domain_error(
                "enumerate_diagrams: amplitudes must be monomials for degree-sliced enumeration");
        if (!amp.is_zero() && amp.min_eps_degree() == eps_degree) out.push_back(std::move(datum));
    }
    return out;
}

Rational oracle_coefficient(const ModelSpec& model, unsigned eps_degree, unsigned g_degree) {
    const unsigned max_legs = pairing_bound(model, eps_degree, g_degree);
    if (max_legs > kLegCap)
        throw std::out_of_range("oracle_coefficient: degree needs more than 8 legs");
    BiPoly total;
    for (const auto& datum : enumerate_diagrams_by_legs(model, max_legs))
        total += amplitude_product(model, datum.diagram) * datum.symmetry_number;
    return total.coeff(eps_degree, g_degree);
}

std::vector<SymmetryDatum> connected_filter(std::span<const SymmetryDatum> data) {
    std::vector<SymmetryDatum> out;
    for (const auto& datum : data)
        if (datum.connected) out.push_back(datum);
    return out;
}

BiPoly amplitude_product(const ModelSpec& model, const Diagram& d) {
    BiPoly amp(Rational(1));
    for (unsigned m : d.line_arities) amp *= model.line_amplitude(m);
    for (unsigned n : d.vertex_arities) amp *= model.vertex_amplitude(n);
    return amp;
}

}  // namespace zdqft
