#ifndef ZDQFT_MODEL_IO_HPP
#define ZDQFT_MODEL_IO_HPP

#include <string>

#include <json.hpp>

#include "zdqft/model.hpp"

namespace zdqft {

/// Model file schema:
///
///   {
///     "mode": "finite" | "legs-graded",
///     "lines":    [ {"arity": 2,     "amplitude": [{"coef": "1", "eps": 1, "g": 0}]},
///                   {"arity": "all", "amplitude": [{"coef": "1", "eps": "m", "g": 0}]} ],
///     "vertices": [ ... ]
///   }
///
/// A monomial is {"coef": "p/q", "eps": a, "g": b} with the coefficient as a
/// decimal rational string. An "all"-arity entry declares one amplitude for
/// every arity >= 1; it must be a single monomial whose eps exponent is
/// either a number or the string "m", meaning "equal to the arity".
ModelSpec model_from_json(const nlohmann::json& doc);

ModelSpec load_model_file(const std::string& path);

/// Builtin model name, else a path to a model file.
ModelSpec resolve_model(const std::string& name_or_path);

}  // namespace zdqft

#endif
