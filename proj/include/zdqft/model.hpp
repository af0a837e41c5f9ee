#ifndef ZDQFT_MODEL_HPP
#define ZDQFT_MODEL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zdqft/bipoly.hpp"

namespace zdqft {

/// How the engine convinces itself that every truncated coefficient of the
/// partition function is a finite sum.
///   FiniteSupport: finitely many line/vertex families; the pairing index is
///                  bounded through the amplitudes' minimum degrees.
///   LegsGraded:    every m-legged line amplitude carries at least eps^m, so
///                  a coefficient of eps^n only sees n legs.
enum class FinitenessMode { FiniteSupport, LegsGraded };

/// Amplitude assigned uniformly to every arity >= 1 of one side, e.g.
/// "every m-legged line has amplitude eps^m" or "every vertex has amplitude
/// g". Families are expanded lazily up to the arity a given truncation can
/// reach.
struct AmplitudeFamily {
    Rational coef = Rational(1);
    bool eps_tracks_arity = false;  // eps exponent equals the arity
    unsigned eps = 0;               // eps exponent when not tracking arity
    unsigned g = 0;                 // g exponent (always fixed)

    BiPoly amplitude(unsigned arity) const;
};

/// A zero-dimensional field theory: line amplitudes L_m (generalised lines
/// with m legs), vertex amplitudes V_n (n-point vertices), and a finiteness
/// mode. Each side holds either finitely many explicit arities or one
/// all-arities family, never both.
class ModelSpec {
  public:
    ModelSpec(FinitenessMode mode, std::map<unsigned, BiPoly> lines,
              std::map<unsigned, BiPoly> vertices,
              std::optional<AmplitudeFamily> line_family = std::nullopt,
              std::optional<AmplitudeFamily> vertex_family = std::nullopt);

    FinitenessMode mode() const { return mode_; }

    const std::map<unsigned, BiPoly>& explicit_lines() const { return lines_; }
    const std::map<unsigned, BiPoly>& explicit_vertices() const { return vertices_; }
    const std::optional<AmplitudeFamily>& line_family() const { return line_family_; }
    const std::optional<AmplitudeFamily>& vertex_family() const { return vertex_family_; }

    bool has_lines() const { return line_family_.has_value() || !lines_.empty(); }
    bool has_vertices() const { return vertex_family_.has_value() || !vertices_.empty(); }

    /// All line amplitudes with arity <= max_arity, families expanded.
    std::map<unsigned, BiPoly> lines_up_to(unsigned max_arity) const;
    std::map<unsigned, BiPoly> vertices_up_to(unsigned max_arity) const;

    std::vector<unsigned> line_arities_up_to(unsigned max_arity) const;
    std::vector<unsigned> vertex_arities_up_to(unsigned max_arity) const;

    /// Amplitude of one arity; throws std::invalid_argument if the model has
    /// no family at that arity.
    BiPoly line_amplitude(unsigned arity) const;
    BiPoly vertex_amplitude(unsigned arity) const;

  private:
    FinitenessMode mode_;
    std::map<unsigned, BiPoly> lines_;
    std::map<unsigned, BiPoly> vertices_;
    std::optional<AmplitudeFamily> line_family_;
    std::optional<AmplitudeFamily> vertex_family_;
};

/// Built-in models:
///   phi4          L_2 = eps, V_4 = g                       (FiniteSupport)
///   partitions    L_1 = eps, V_n = g for all n             (FiniteSupport)
///   bell-squared  L_m = eps^m and V_n = 1 for all m, n     (LegsGraded)
ModelSpec builtin_model(const std::string& name);

std::vector<std::string> builtin_model_names();

/// Deterministic random FiniteSupport model for engine/oracle agreement
/// tests: arities <= 3, small rational coefficients. Half the seeds grade
/// each line by eps^m, the other half by a single eps per line.
ModelSpec random_finite_model(std::uint64_t seed);

}  // namespace zdqft

#endif
