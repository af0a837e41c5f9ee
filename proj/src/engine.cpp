#include "zdqft/engine.hpp"

#include <algorithm>

#include "zdqft/series.hpp"

namespace zdqft {

namespace {

// Per-leg degree floor of one side: every monomial produced by k legs of
// this side has eps degree >= ceil(k * eps_ratio) and likewise for g. For an
// explicit arity-m family the ratio is (minimum degree)/m; an all-arities
// family graded as eps^m contributes ratio 1 in eps, and any fixed-exponent
// family contributes 0 (its exponent is diluted over unboundedly many legs).
struct SideRatios {
    bool present = false;
    Rational eps;
    Rational g;
};

SideRatios side_ratios(const std::map<unsigned, BiPoly>& entries,
                       const std::optional<AmplitudeFamily>& family) {
    SideRatios r;
    bool first = true;
    auto fold = [&](const Rational& eps_ratio, const Rational& g_ratio) {
        if (first) {
            r.eps = eps_ratio;
            r.g = g_ratio;
            first = false;
        } else {
            r.eps = std::min(r.eps, eps_ratio);
            r.g = std::min(r.g, g_ratio);
        }
    };
    for (const auto& [arity, amp] : entries)
        fold(Rational(Integer(amp.min_eps_degree()), Integer(arity)),
             Rational(Integer(amp.min_g_degree()), Integer(arity)));
    if (family) fold(family->eps_tracks_arity ? Rational(1) : Rational(0), Rational(0));
    r.present = !first;
    return r;
}

unsigned floor_quotient(unsigned order, const Rational& ratio) {
    // floor(order / ratio), ratio > 0
    Integer q;
    Integer num = Integer(order) * ratio.denominator();
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), ratio.numerator().get_mpz_t());
    if (!q.fits_uint_p()) throw FinitenessError("pairing bound does not fit in an unsigned int");
    return static_cast<unsigned>(q.get_ui());
}

}  // namespace

unsigned legs_bound(const ModelSpec& model, unsigned eps_order, std::optional<unsigned> g_order) {
    if (!model.has_lines() || !model.has_vertices()) return 0;
    if (model.mode() == FinitenessMode::LegsGraded) return eps_order;

    const SideRatios lines = side_ratios(model.explicit_lines(), model.line_family());
    const SideRatios vertices = side_ratios(model.explicit_vertices(), model.vertex_family());
    const Rational eps_cost = lines.eps + vertices.eps;
    const Rational g_cost = lines.g + vertices.g;

    std::optional<unsigned> bound;
    if (eps_cost > Rational(0)) bound = floor_quotient(eps_order, eps_cost);
    if (g_order && g_cost > Rational(0)) {
        unsigned b = floor_quotient(*g_order, g_cost);
        bound = bound ? std::min(*bound, b) : b;
    }
    if (!bound)
        throw FinitenessError(
            "model has unbounded support and no eps/g grading; its coefficients are divergent "
            "formal sums");
    return *bound;
}

unsigned pairing_bound(const ModelSpec& model, unsigned eps_order, unsigned g_order) {
    return legs_bound(model, eps_order, g_order);
}

PartitionSeries partition_function(const ModelSpec& model, unsigned eps_order, unsigned g_order) {
    const unsigned K = pairing_bound(model, eps_order, g_order);

    TruncSeries<BiPoly> line_arg(K), vertex_arg(K);
    for (const auto& [m, amp] : model.lines_up_to(K))
        line_arg.set_coeff(m, amp * inv_factorial(m));
    for (const auto& [n, amp] : model.vertices_up_to(K))
        vertex_arg.set_coeff(n, amp * inv_factorial(n));

    const TruncSeries<BiPoly> a = exp(line_arg);
    const TruncSeries<BiPoly> b = exp(vertex_arg);

    BiPoly z;
    Integer k_factorial = 1;
    for (unsigned k = 0; k <= K; ++k) {
        if (k > 0) k_factorial *= k;
        BiPoly term = a.coeff(k) * b.coeff(k);
        if (term.is_zero()) continue;
        z += (term * Rational(k_factorial)).truncated(eps_order, g_order);
    }
    return PartitionSeries{z, eps_order, g_order};
}

namespace {

// Homogeneous slices by total degree eps + g; the Euler grading that turns
// the one-variable exp/log recurrences into bivariate ones.
std::vector<BiPoly> graded_slices(const BiPoly& p, unsigned d_max) {
    std::vector<BiPoly> slices(d_max + 1);
    for (const auto& [key, c] : p.terms()) {
        const unsigned d = key.first + key.second;
        if (d <= d_max) slices[d] += BiPoly::monomial(c, key.first, key.second);
    }
    return slices;
}

BiPoly collect(const std::vector<BiPoly>& slices, unsigned eps_order, unsigned g_order) {
    BiPoly out;
    for (const auto& s : slices) out += s;
    return out.truncated(eps_order, g_order);
}

}  // namespace

PartitionSeries free_energy(const PartitionSeries& z) {
    if (z.table.coeff(0, 0) != Rational(1))
        throw std::domain_error("free_energy: constant term of Z must be 1");
    const unsigned d_max = z.eps_order + z.g_order;
    const auto zs = graded_slices(z.table, d_max);
    std::vector<BiPoly> ls(d_max + 1);
    for (unsigned d = 1; d <= d_max; ++d) {
        BiPoly acc = zs[d] * Rational(static_cast<long>(d));
        for (unsigned e = 1; e < d; ++e)
            acc -= (ls[e] * zs[d - e]).truncated(z.eps_order, z.g_order) *
                   Rational(static_cast<long>(e));
        ls[d] = acc * Rational(1L, static_cast<long>(d));
    }
    return PartitionSeries{collect(ls, z.eps_order, z.g_order), z.eps_order, z.g_order};
}

PartitionSeries exp_series(const PartitionSeries& c) {
    if (!c.table.coeff(0, 0).is_zero())
        throw std::domain_error("exp_series: constant term must be 0");
    const unsigned d_max = c.eps_order + c.g_order;
    const auto cs = graded_slices(c.table, d_max);
    std::vector<BiPoly> es(d_max + 1);
    es[0] = BiPoly(Rational(1));
    for (unsigned d = 1; d <= d_max; ++d) {
        BiPoly acc;
        for (unsigned e = 1; e <= d; ++e)
            acc += (cs[e] * es[d - e]).truncated(c.eps_order, c.g_order) *
                   Rational(static_cast<long>(e));
        es[d] = acc * Rational(1L, static_cast<long>(d));
    }
    return PartitionSeries{collect(es, c.eps_order, c.g_order), c.eps_order, c.g_order};
}

std::vector<std::vector<Integer>> stirling_coefficients(unsigned n_max) {
    const PartitionSeries z = partition_function(builtin_model("partitions"), n_max, n_max);
    std::vector<std::vector<Integer>> rows(n_max + 1);
    Integer n_factorial = 1;
    for (unsigned n = 1; n <= n_max; ++n) {
        n_factorial *= n;
        rows[n].reserve(n);
        for (unsigned k = 1; k <= n; ++k) {
            const Rational s = z.coeff(n, k) * Rational(n_factorial);
            if (!s.is_integer())
                throw std::logic_error("stirling_coefficients: non-integer table entry");
            rows[n].push_back(s.numerator());
        }
    }
    return rows;
}

}  // namespace zdqft
