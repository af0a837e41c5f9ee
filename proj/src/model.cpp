#include "zdqft/model.hpp"

#include <random>
#include <stdexcept>

namespace zdqft {

BiPoly AmplitudeFamily::amplitude(unsigned arity) const {
    return BiPoly::monomial(coef, eps_tracks_arity ? arity : eps, g);
}

namespace {

void validate_side(const char* side, const std::map<unsigned, BiPoly>& entries,
                   const std::optional<AmplitudeFamily>& family) {
    if (family && !entries.empty())
        throw std::invalid_argument(std::string("ModelSpec: ") + side +
                                    " mixes explicit arities with an all-arities family");
    if (family && family->coef.is_zero())
        throw std::invalid_argument(std::string("ModelSpec: ") + side + " family has zero amplitude");
    for (const auto& [arity, amp] : entries) {
        if (arity < 1)
            throw std::invalid_argument(std::string("ModelSpec: ") + side + " arity must be >= 1");
        if (amp.is_zero())
            throw std::invalid_argument(std::string("ModelSpec: ") + side + " amplitude is zero");
    }
}

}  // namespace

ModelSpec::ModelSpec(FinitenessMode mode, std::map<unsigned, BiPoly> lines,
                     std::map<unsigned, BiPoly> vertices,
                     std::optional<AmplitudeFamily> line_family,
                     std::optional<AmplitudeFamily> vertex_family)
    : mode_(mode),
      lines_(std::move(lines)),
      vertices_(std::move(vertices)),
      line_family_(std::move(line_family)),
      vertex_family_(std::move(vertex_family)) {
    validate_side("lines", lines_, line_family_);
    validate_side("vertices", vertices_, vertex_family_);
    if (mode_ == FinitenessMode::LegsGraded) {
        // Each m-legged line must carry at least eps^m in every monomial.
        for (const auto& [arity, amp] : lines_)
            if (amp.min_eps_degree() < arity)
                throw std::invalid_argument(
                    "ModelSpec: LegsGraded line amplitude with eps degree below its arity");
        if (line_family_ && !line_family_->eps_tracks_arity)
            throw std::invalid_argument(
                "ModelSpec: LegsGraded all-arities line family must grade eps by arity");
    }
}

std::map<unsigned, BiPoly> ModelSpec::lines_up_to(unsigned max_arity) const {
    if (!line_family_) {
        std::map<unsigned, BiPoly> out;
        for (const auto& [arity, amp] : lines_)
            if (arity <= max_arity) out.emplace(arity, amp);
        return out;
    }
    std::map<unsigned, BiPoly> out;
    for (unsigned m = 1; m <= max_arity; ++m) out.emplace(m, line_family_->amplitude(m));
    return out;
}

std::map<unsigned, BiPoly> ModelSpec::vertices_up_to(unsigned max_arity) const {
    if (!vertex_family_) {
        std::map<unsigned, BiPoly> out;
        for (const auto& [arity, amp] : vertices_)
            if (arity <= max_arity) out.emplace(arity, amp);
        return out;
    }
    std::map<unsigned, BiPoly> out;
    for (unsigned n = 1; n <= max_arity; ++n) out.emplace(n, vertex_family_->amplitude(n));
    return out;
}

std::vector<unsigned> ModelSpec::line_arities_up_to(unsigned max_arity) const {
    std::vector<unsigned> out;
    for (const auto& [arity, amp] : lines_up_to(max_arity)) out.push_back(arity);
    return out;
}

std::vector<unsigned> ModelSpec::vertex_arities_up_to(unsigned max_arity) const {
    std::vector<unsigned> out;
    for (const auto& [arity, amp] : vertices_up_to(max_arity)) out.push_back(arity);
    return out;
}

BiPoly ModelSpec::line_amplitude(unsigned arity) const {
    if (line_family_) return line_family_->amplitude(arity);
    auto it = lines_.find(arity);
    if (it == lines_.end())
        throw std::invalid_argument("ModelSpec: no line family of arity " + std::to_string(arity));
    return it->second;
}

BiPoly ModelSpec::vertex_amplitude(unsigned arity) const {
    if (vertex_family_) return vertex_family_->amplitude(arity);
    auto it = vertices_.find(arity);
    if (it == vertices_.end())
        throw std::invalid_argument("ModelSpec: no vertex family of arity " + std::to_string(arity));
    return it->second;
}

ModelSpec builtin_model(const std::string& name) {
    if (name == "phi4") {
        std::map<unsigned, BiPoly> lines{{2, BiPoly::monomial(Rational(1), 1, 0)}};
        std::map<unsigned, BiPoly> vertices{{4, BiPoly::monomial(Rational(1), 0, 1)}};
        return ModelSpec(FinitenessMode::FiniteSupport, std::move(lines), std::move(vertices));
    }
    if (name == "partitions") {
        std::map<unsigned, BiPoly> lines{{1, BiPoly::monomial(Rational(1), 1, 0)}};
        AmplitudeFamily vertices;  // V_n = g for every n
        vertices.g = 1;
        return ModelSpec(FinitenessMode::FiniteSupport, std::move(lines), {}, std::nullopt,
                         vertices);
    }
    if (name == "bell-squared") {
        AmplitudeFamily lines;  // L_m = eps^m for every m
        lines.eps_tracks_arity = true;
        AmplitudeFamily vertices;  // V_n = 1 for every n
        return ModelSpec(FinitenessMode::LegsGraded, {}, {}, lines, vertices);
    }
    throw std::invalid_argument("unknown builtin model '" + name + "'");
}

std::vector<std::string> builtin_model_names() { return {"bell-squared", "partitions", "phi4"}; }

ModelSpec random_finite_model(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto small = [&](long lo, long hi) { return lo + static_cast<long>(rng() % (hi - lo + 1)); };
    auto coef = [&]() {
        long num = small(1, 4) * (rng() % 2 == 0 ? 1 : -1);
        return Rational(num, small(1, 4));
    };
    const bool per_leg_grading = rng() % 2 == 0;

    std::map<unsigned, BiPoly> lines, vertices;
    while (lines.empty())
        for (unsigned m = 1; m <= 3; ++m)
            if (rng() % 2 == 0)
                lines.emplace(m, BiPoly::monomial(coef(), per_leg_grading ? m : 1, 0));
    while (vertices.empty())
        for (unsigned n = 1; n <= 3; ++n)
            if (rng() % 2 == 0) vertices.emplace(n, BiPoly::monomial(coef(), 0, 1));
    return ModelSpec(FinitenessMode::FiniteSupport, std::move(lines), std::move(vertices));
}

}  // namespace zdqft
