#include "zdqft/model_io.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace zdqft {

namespace {

using nlohmann::json;

Rational parse_coef(const json& j) {
    if (j.is_string()) return Rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("model file: coefficient must be a rational string");
}

unsigned parse_exponent(const json& j, const char* what) {
    if (!j.is_number_unsigned())
        throw std::invalid_argument(std::string("model file: ") + what +
                                    " exponent must be a non-negative integer");
    return j.get<unsigned>();
}

BiPoly parse_amplitude(const json& monomials) {
    if (!monomials.is_array() || monomials.empty())
        throw std::invalid_argument("model file: amplitude must be a non-empty monomial array");
    BiPoly amp;
    for (const auto& m : monomials)
        amp += BiPoly::monomial(parse_coef(m.at("coef")), parse_exponent(m.at("eps"), "eps"),
                                parse_exponent(m.at("g"), "g"));
    return amp;
}

AmplitudeFamily parse_family(const json& monomials) {
    if (!monomials.is_array() || monomials.size() != 1)
        throw std::invalid_argument(
            "model file: an all-arities family must have a single monomial template");
    const auto& m = monomials.at(0);
    AmplitudeFamily family;
    family.coef = parse_coef(m.at("coef"));
    const auto& eps = m.at("eps");
    if (eps.is_string()) {
        if (eps.get<std::string>() != "m")
            throw std::invalid_argument("model file: eps exponent string must be \"m\"");
        family.eps_tracks_arity = true;
    } else {
        family.eps = parse_exponent(eps, "eps");
    }
    family.g = parse_exponent(m.at("g"), "g");
    return family;
}

void parse_side(const json& doc, const char* key, std::map<unsigned, BiPoly>& entries,
                std::optional<AmplitudeFamily>& family) {
    if (!doc.contains(key)) return;
    const auto& side = doc.at(key);
    if (!side.is_array()) throw std::invalid_argument(std::string("model file: ") + key +
                                                      " must be an array");
    for (const auto& entry : side) {
        const auto& arity = entry.at("arity");
        if (arity.is_string()) {
            if (arity.get<std::string>() != "all")
                throw std::invalid_argument("model file: arity must be a number or \"all\"");
            if (family)
                throw std::invalid_argument(std::string("model file: ") + key +
                                            " declares two all-arities families");
            family = parse_family(entry.at("amplitude"));
        } else {
            if (!arity.is_number_unsigned() || arity.get<unsigned>() < 1)
                throw std::invalid_argument("model file: arity must be >= 1");
            if (!entries.emplace(arity.get<unsigned>(), parse_amplitude(entry.at("amplitude")))
                     .second)
                throw std::invalid_argument("model file: duplicate arity");
        }
    }
}

}  // namespace

ModelSpec model_from_json(const json& doc) {
    const std::string mode_name = doc.at("mode").get<std::string>();
    FinitenessMode mode;
    if (mode_name == "finite")
        mode = FinitenessMode::FiniteSupport;
    else if (mode_name == "legs-graded")
        mode = FinitenessMode::LegsGraded;
    else
        throw std::invalid_argument("model file: mode must be \"finite\" or \"legs-graded\"");

    std::map<unsigned, BiPoly> lines, vertices;
    std::optional<AmplitudeFamily> line_family, vertex_family;
    parse_side(doc, "lines", lines, line_family);
    parse_side(doc, "vertices", vertices, vertex_family);
    return ModelSpec(mode, std::move(lines), std::move(vertices), std::move(line_family),
                     std::move(vertex_family));
}

ModelSpec load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open model file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("model file '" + path + "': " + e.what());
    }
    return model_from_json(doc);
}

ModelSpec resolve_model(const std::string& name_or_path) {
    for (const auto& name : builtin_model_names())
        if (name == name_or_path) return builtin_model(name);
    if (!std::filesystem::exists(name_or_path))
        throw std::invalid_argument("'" + name_or_path +
                                    "' is neither a builtin model nor a model file");
    return load_model_file(name_or_path);
}

}  // namespace zdqft
