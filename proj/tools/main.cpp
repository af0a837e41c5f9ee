// zdqft: exact generating functions for zero-dimensional field theories,
// with cross-checking enumeration oracles.
//
// Subcommands: series, seq, verify, enumerate. Output is JSON by default
// (--format csv|table for flat views). Exit codes: 0 success, 1 verification
// mismatch, 2 usage or input error, 3 finiteness error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "zdqft/combinatorics.hpp"
#include "zdqft/engine.hpp"
#include "zdqft/model_io.hpp"
#include "zdqft/relations.hpp"
#include "zdqft/series.hpp"
#include "zdqft/wick.hpp"

using namespace zdqft;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFiniteness = 3;

struct Output {
    ordered_json record;                         // the full machine-readable record
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> rows;  // flat view for csv/table
};

void print_output(const Output& out, const std::string& format) {
    if (format == "json") {
        std::cout << out.record.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        auto join = [](const std::vector<std::string>& cells) {
            std::string line;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i) line += ',';
                line += cells[i];
            }
            return line;
        };
        std::cout << join(out.csv_header) << "\n";
        for (const auto& row : out.rows) std::cout << join(row) << "\n";
        return;
    }
    // table
    std::vector<std::size_t> widths(out.csv_header.size(), 0);
    auto widen = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            widths[i] = std::max(widths[i], cells[i].size());
    };
    widen(out.csv_header);
    for (const auto& row : out.rows) widen(row);
    auto print_row = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            std::cout << (i ? "  " : "") << cells[i]
                      << std::string(widths[i] - cells[i].size(), ' ');
        std::cout << "\n";
    };
    print_row(out.csv_header);
    for (const auto& row : out.rows) print_row(row);
    std::cout << "status: " << out.record.at("status").get<std::string>() << "\n";
}

ordered_json record_for(const std::string& command, ordered_json parameters) {
    ordered_json record;
    record["command"] = command;
    record["parameters"] = std::move(parameters);
    record["results"] = ordered_json::object();
    record["status"] = "ok";
    return record;
}

// ---------------------------------------------------------------- series --

int cmd_series(const std::string& model_name, unsigned eps_order, int g_order_opt, bool connected,
               const std::string& format) {
    const unsigned g_order = g_order_opt < 0 ? eps_order : static_cast<unsigned>(g_order_opt);
    const ModelSpec model = resolve_model(model_name);
    PartitionSeries series = partition_function(model, eps_order, g_order);
    if (connected) series = free_energy(series);

    Output out;
    out.record = record_for("series", {{"model", model_name},
                                       {"eps_order", eps_order},
                                       {"g_order", g_order},
                                       {"connected", connected}});
    ordered_json coeffs = ordered_json::array();
    out.csv_header = {"eps", "g", "coefficient"};
    for (const auto& [key, value] : series.table.terms()) {
        coeffs.push_back(ordered_json{{"eps", key.first}, {"g", key.second},
                                      {"value", value.str()}});
        out.rows.push_back({std::to_string(key.first), std::to_string(key.second), value.str()});
    }
    out.record["results"]["coefficients"] = std::move(coeffs);
    print_output(out, format);
    return kExitOk;
}

// ------------------------------------------------------------------- seq --

int cmd_seq(const std::string& name, unsigned n, const std::string& format) {
    Output out;
    out.record = record_for("seq", {{"name", name}, {"n", n}});

    if (name == "stirling") {
        const StirlingTable table(std::max(1u, n));
        ordered_json rows = ordered_json::array();
        out.csv_header = {"n", "k", "value"};
        for (unsigned i = 1; i <= std::max(1u, n); ++i) {
            ordered_json row = ordered_json::array();
            for (unsigned k = 1; k <= i; ++k) {
                row.push_back(table.value(i, k).get_str());
                out.rows.push_back({std::to_string(i), std::to_string(k),
                                    table.value(i, k).get_str()});
            }
            rows.push_back(std::move(row));
        }
        out.record["results"]["rows"] = std::move(rows);
        out.record["results"]["provenance"] = "recurrence";
        print_output(out, format);
        return kExitOk;
    }

    SequenceRecord seq;
    if (name == "bell") {
        seq = bell_numbers(n);
    } else if (name == "partitions") {
        seq = partition_counts(n);
    } else if (name == "bell-squared") {
        seq = bell_numbers(n);
        seq.name = "bell-squared";
        for (auto& v : seq.values) v *= v;
    } else {
        throw std::invalid_argument("unknown sequence '" + name + "'");
    }

    ordered_json values = ordered_json::array();
    out.csv_header = {"n", "value"};
    for (unsigned i = 0; i < seq.values.size(); ++i) {
        values.push_back(seq.values[i].get_str());
        out.rows.push_back({std::to_string(i), seq.values[i].get_str()});
    }
    out.record["results"]["values"] = std::move(values);
    out.record["results"]["provenance"] = provenance_name(seq.provenance);
    print_output(out, format);
    return kExitOk;
}

// ---------------------------------------------------------------- verify --

struct CheckRow {
    std::string item, expected, actual;
    bool pass;
};

int cmd_verify(const std::string& check, int n_opt, std::uint64_t seed, unsigned count,
               const std::string& format) {
    std::vector<CheckRow> rows;
    auto add = [&](std::string item, std::string expected, std::string actual) {
        const bool pass = expected == actual;
        rows.push_back({std::move(item), std::move(expected), std::move(actual), pass});
    };

    unsigned n = 0;
    if (check == "bell-squared") {
        n = n_opt < 0 ? 20 : static_cast<unsigned>(n_opt);
        const PartitionSeries z = partition_function(builtin_model("bell-squared"), n, 0);
        const SequenceRecord bell = bell_numbers(n);
        Integer n_factorial = 1;
        for (unsigned i = 0; i <= n; ++i) {
            if (i > 0) n_factorial *= i;
            add("n! [eps^" + std::to_string(i) + "] Z",
                Rational(bell.values[i] * bell.values[i]).str(),
                (z.coeff(i, 0) * Rational(n_factorial)).str());
        }
    } else if (check == "stirling-model") {
        n = n_opt < 0 ? 12 : static_cast<unsigned>(n_opt);
        const PartitionSeries z = partition_function(builtin_model("partitions"), n, n);
        const StirlingTable table(n);
        Integer n_factorial = 1;
        for (unsigned i = 1; i <= n; ++i) {
            n_factorial *= i;
            for (unsigned k = 1; k <= i; ++k)
                add("S(" + std::to_string(i) + "," + std::to_string(k) + ")",
                    table.value(i, k).get_str(),
                    (z.coeff(i, k) * Rational(n_factorial)).str());
        }
    } else if (check == "topology-identity") {
        n = n_opt < 0 ? 4 : static_cast<unsigned>(n_opt);
        const StirlingIdentityReport report = verify_stirling_identity(n);
        add("t_" + std::to_string(n) + " = sum_k S(n,k) d_k",
            std::to_string(report.stirling_sum), std::to_string(report.connected_preorders));
        for (const auto& fiber : report.fibers)
            add("fibers with k=" + std::to_string(fiber.k),
                std::to_string(fiber.stirling * fiber.connected_posets),
                std::to_string(fiber.fiber_count));
    } else if (check == "oracle-agreement") {
        n = n_opt < 0 ? 4 : static_cast<unsigned>(n_opt);
        if (n > 8) throw std::invalid_argument("oracle-agreement is capped at --n 8");
        for (std::uint64_t s = seed; s < seed + count; ++s) {
            const ModelSpec model = random_finite_model(s);
            const PartitionSeries z = partition_function(model, n, n);
            bool all = true;
            std::size_t compared = 0;
            std::string diff = "all equal";
            for (unsigned i = 0; i <= n && all; ++i)
                for (unsigned j = 0; j <= n && all; ++j) {
                    Rational oracle;
                    try {
                        oracle = oracle_coefficient(model, i, j);
                    } catch (const std::out_of_range&) {
                        continue;
                    }
                    ++compared;
                    if (z.coeff(i, j) != oracle) {
                        all = false;
                        diff = "eps^" + std::to_string(i) + " g^" + std::to_string(j) + ": " +
                               z.coeff(i, j).str() + " vs " + oracle.str();
                    }
                }
            add("seed " + std::to_string(s) + " (" + std::to_string(compared) + " coefficients)",
                "all equal", diff);
        }
    } else if (check == "exp-log") {
        n = n_opt < 0 ? 10 : static_cast<unsigned>(n_opt);
        for (const auto& name : builtin_model_names()) {
            const PartitionSeries z = partition_function(builtin_model(name), n, n);
            add("exp(ln Z) = Z for " + name, "true",
                exp_series(free_energy(z)) == z ? "true" : "false");
        }
        const ConnectedTotalsReport report = connected_totals_cross_check(4);
        auto seq_str = [](const std::vector<std::uint64_t>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
            return s;
        };
        add("exp of connected poset EGF", seq_str(report.poset_total),
            seq_str(report.poset_total_from_exp));
        add("exp of connected preorder EGF", seq_str(report.preorder_total),
            seq_str(report.preorder_total_from_exp));
    } else {
        throw std::invalid_argument("unknown check '" + check + "'");
    }

    bool all_pass = true;
    for (const auto& row : rows) all_pass = all_pass && row.pass;

    Output out;
    out.record = record_for("verify", {{"check", check},
                                       {"n", n},
                                       {"seed", seed},
                                       {"count", count}});
    out.csv_header = {"item", "expected", "actual", "pass"};
    ordered_json detail = ordered_json::array();
    for (const auto& row : rows) {
        detail.push_back(ordered_json{{"item", row.item},
                                      {"expected", row.expected},
                                      {"actual", row.actual},
                                      {"pass", row.pass}});
        out.rows.push_back({row.item, row.expected, row.actual, row.pass ? "PASS" : "FAIL"});
    }
    out.record["results"]["pass"] = all_pass;
    out.record["results"]["detail"] = std::move(detail);
    out.record["status"] = all_pass ? "ok" : "mismatch";
    print_output(out, format);
    return all_pass ? kExitOk : kExitMismatch;
}

// ------------------------------------------------------------- enumerate --

int cmd_enumerate(const std::string& structure, unsigned n, bool connected, bool unlabelled,
                  const std::string& model_name, bool reps, bool allow_large,
                  const std::string& format) {
    Output out;
    out.record = record_for("enumerate", {{"structure", structure},
                                          {"n", n},
                                          {"connected", connected},
                                          {"unlabelled", unlabelled},
                                          {"model", model_name}});
    out.csv_header = {"count"};
    ordered_json representatives = ordered_json::array();
    std::size_t count = 0;

    if (structure == "preorders" || structure == "posets") {
        auto all = structure == "posets" ? enumerate_posets(n, allow_large)
                                         : enumerate_preorders(n, allow_large);
        if (connected) {
            std::erase_if(all, [](const Relation& r) { return !is_connected(r); });
        }
        if (unlabelled) {
            std::set<Relation> canon;
            for (const auto& r : all) canon.insert(canonical_relation(r));
            count = canon.size();
            if (reps)
                for (const auto& r : canon) representatives.push_back(r.row_strings());
        } else {
            count = all.size();
            if (reps) {
                std::set<Relation> canon;
                for (const auto& r : all) canon.insert(canonical_relation(r));
                for (const auto& r : canon) representatives.push_back(r.row_strings());
            }
        }
    } else if (structure == "diagrams") {
        const ModelSpec model = resolve_model(model_name);
        auto diagrams = enumerate_diagrams(model, n);
        if (connected) {
            std::erase_if(diagrams, [](const SymmetryDatum& d) { return !d.connected; });
        }
        count = diagrams.size();
        if (reps)
            for (const auto& d : diagrams)
                representatives.push_back(
                    ordered_json{{"line_arities", d.diagram.line_arities},
                                 {"vertex_arities", d.diagram.vertex_arities},
                                 {"incidence", d.diagram.incidence},
                                 {"aut_order", d.aut_order},
                                 {"symmetry_number", d.symmetry_number.str()},
                                 {"connected", d.connected}});
    } else {
        throw std::invalid_argument("unknown structure '" + structure + "'");
    }

    out.record["results"]["count"] = count;
    if (reps) out.record["results"]["representatives"] = std::move(representatives);
    out.rows.push_back({std::to_string(count)});
    print_output(out, format);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact diagram-counting engine for zero-dimensional field theories"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    app.fallthrough();

    // series
    auto* series = app.add_subcommand("series", "coefficients of Z or ln Z for a model");
    std::string series_model = "partitions";
    unsigned series_eps = 6;
    int series_g = -1;
    bool series_connected = false;
    series->add_option("--model", series_model, "builtin name or model file")
        ->capture_default_str();
    series->add_option("--eps-order", series_eps, "eps truncation order")->capture_default_str();
    series->add_option("--g-order", series_g, "g truncation order (default: eps order)");
    series->add_flag("--connected", series_connected, "emit ln Z instead of Z");

    // seq
    auto* seq = app.add_subcommand("seq", "integer sequences with provenance");
    std::string seq_name;
    unsigned seq_n = 10;
    seq->add_option("--name", seq_name, "bell | stirling | partitions | bell-squared")
        ->required();
    seq->add_option("--n", seq_n, "last index")->capture_default_str();

    // verify
    auto* verify = app.add_subcommand("verify", "cross-check the implemented identities");
    std::string verify_check;
    int verify_n = -1;
    std::uint64_t verify_seed = 0;
    unsigned verify_count = 20;
    verify
        ->add_option("--check", verify_check,
                     "bell-squared | stirling-model | topology-identity | oracle-agreement | "
                     "exp-log")
        ->required();
    verify->add_option("--n", verify_n, "size/order (default depends on the check)");
    verify->add_option("--seed", verify_seed, "base seed for random models")
        ->capture_default_str();
    verify->add_option("--count", verify_count, "number of random models")->capture_default_str();

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "count structures, optionally listing them");
    std::string enum_structure;
    unsigned enum_n = 3;
    bool enum_connected = false, enum_unlabelled = false, enum_reps = false,
         enum_allow_large = false;
    std::string enum_model = "bell-squared";
    enumerate->add_option("--structure", enum_structure, "preorders | posets | diagrams")
        ->required();
    enumerate->add_option("--n", enum_n, "points (relations) or eps degree (diagrams)")
        ->capture_default_str();
    enumerate->add_flag("--connected", enum_connected, "keep only connected structures");
    enumerate->add_flag("--unlabelled", enum_unlabelled, "count isomorphism classes");
    enumerate->add_option("--model", enum_model, "model for diagram enumeration")
        ->capture_default_str();
    enumerate->add_flag("--reps", enum_reps, "list canonical representatives");
    enumerate->add_flag("--allow-large", enum_allow_large, "raise the n <= 5 relation cap to 6");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (series->parsed())
            return cmd_series(series_model, series_eps, series_g, series_connected, format);
        if (seq->parsed()) return cmd_seq(seq_name, seq_n, format);
        if (verify->parsed())
            return cmd_verify(verify_check, verify_n, verify_seed, verify_count, format);
        if (enumerate->parsed())
            return cmd_enumerate(enum_structure, enum_n, enum_connected, enum_unlabelled,
                                 enum_model, enum_reps, enum_allow_large, format);
    } catch (const FinitenessError& e) {
        std::cerr << "finiteness error: " << e.what() << "\n";
        return kExitFiniteness;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
