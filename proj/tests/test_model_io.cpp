#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "zdqft/engine.hpp"
#include "zdqft/model_io.hpp"

using namespace zdqft;
using nlohmann::json;

namespace {

json phi4_doc() {
    return json::parse(R"({
      "mode": "finite",
      "lines":    [{"arity": 2, "amplitude": [{"coef": "1", "eps": 1, "g": 0}]}],
      "vertices": [{"arity": 4, "amplitude": [{"coef": "1", "eps": 0, "g": 1}]}]
    })");
}

json partitions_doc() {
    return json::parse(R"({
      "mode": "finite",
      "lines":    [{"arity": 1, "amplitude": [{"coef": "1", "eps": 1, "g": 0}]}],
      "vertices": [{"arity": "all", "amplitude": [{"coef": "1", "eps": 0, "g": 1}]}]
    })");
}

json bell_squared_doc() {
    return json::parse(R"({
      "mode": "legs-graded",
      "lines":    [{"arity": "all", "amplitude": [{"coef": "1", "eps": "m", "g": 0}]}],
      "vertices": [{"arity": "all", "amplitude": [{"coef": "1", "eps": 0, "g": 0}]}]
    })");
}

}  // namespace

TEST_CASE("model files reproduce the builtins") {
    const std::vector<std::pair<json, std::string>> cases{
        {phi4_doc(), "phi4"}, {partitions_doc(), "partitions"},
        {bell_squared_doc(), "bell-squared"}};
    for (const auto& [doc, name] : cases) {
        const ModelSpec from_file = model_from_json(doc);
        const ModelSpec builtin = builtin_model(name);
        const PartitionSeries a = partition_function(from_file, 5, 5);
        const PartitionSeries b = partition_function(builtin, 5, 5);
        CHECK(a == b);
    }
}

TEST_CASE("rational string coefficients") {
    const json doc = json::parse(R"({
      "mode": "finite",
      "lines":    [{"arity": 1, "amplitude": [{"coef": "-3/4", "eps": 1, "g": 0}]}],
      "vertices": [{"arity": 2, "amplitude": [{"coef": "1/2", "eps": 0, "g": 1},
                                              {"coef": "5", "eps": 1, "g": 1}]}]
    })");
    const ModelSpec model = model_from_json(doc);
    CHECK(model.line_amplitude(1) == BiPoly::monomial(Rational(-3, 4), 1, 0));
    CHECK(model.vertex_amplitude(2) ==
          BiPoly::monomial(Rational(1, 2), 0, 1) + BiPoly::monomial(Rational(5), 1, 1));
}

TEST_CASE("schema violations are rejected") {
    auto expect_invalid = [](const char* text) {
        CHECK_THROWS_AS(model_from_json(json::parse(text)), std::invalid_argument);
    };
    expect_invalid(R"({"mode": "??", "lines": [], "vertices": []})");
    expect_invalid(R"({"mode": "finite",
        "lines": [{"arity": 0, "amplitude": [{"coef": "1", "eps": 1, "g": 0}]}]})");
    expect_invalid(R"({"mode": "finite",
        "lines": [{"arity": 1, "amplitude": [{"coef": "x", "eps": 1, "g": 0}]}]})");
    expect_invalid(R"({"mode": "finite",
        "lines": [{"arity": "all", "amplitude": [{"coef": "1", "eps": "q", "g": 0}]}]})");
    expect_invalid(R"({"mode": "finite",
        "lines": [{"arity": 1, "amplitude": [{"coef": "1", "eps": 1, "g": 0}]},
                  {"arity": 1, "amplitude": [{"coef": "2", "eps": 1, "g": 0}]}]})");
    expect_invalid(R"({"mode": "finite",
        "lines": [{"arity": "all", "amplitude": [{"coef": "1", "eps": 0, "g": 0}]},
                  {"arity": "all", "amplitude": [{"coef": "2", "eps": 0, "g": 0}]}]})");
    // LegsGraded with an under-graded line.
    expect_invalid(R"({"mode": "legs-graded",
        "lines": [{"arity": 2, "amplitude": [{"coef": "1", "eps": 1, "g": 0}]}],
        "vertices": [{"arity": 1, "amplitude": [{"coef": "1", "eps": 0, "g": 1}]}]})");
}

TEST_CASE("divergent model file loads but cannot be bounded") {
    const json doc = json::parse(R"({
      "mode": "finite",
      "lines":    [{"arity": 2, "amplitude": [{"coef": "1", "eps": 0, "g": 0}]}],
      "vertices": [{"arity": 1, "amplitude": [{"coef": "1", "eps": 0, "g": 0}]}]
    })");
    const ModelSpec model = model_from_json(doc);
    CHECK_THROWS_AS(partition_function(model, 2, 2), FinitenessError);
}

TEST_CASE("resolve_model handles names, paths, and garbage") {
    const ModelSpec by_name = resolve_model("phi4");
    CHECK(by_name.explicit_lines().count(2) == 1);

    const std::string path = "resolve_model_fixture.json";
    {
        std::ofstream out(path);
        out << phi4_doc().dump();
    }
    const ModelSpec by_path = resolve_model(path);
    CHECK(partition_function(by_path, 2, 1).coeff(2, 1) == Rational(1, 8));

    CHECK_THROWS_AS(resolve_model("no-such-model-or-file"), std::invalid_argument);

    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(resolve_model(path), std::invalid_argument);
    std::remove(path.c_str());
}
