#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "romdom/enum_refined.hpp"
#include "romdom/enum_simple.hpp"
#include "romdom/extension.hpp"
#include "romdom/oracle.hpp"

namespace romdom::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& path, std::istream& in) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot read graph file '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(file), {});
    }
    try {
        return parse_edge_list(text);
    } catch (const ParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

MinimalityOrder parse_order(const std::string& order) {
    if (order == "standard") return MinimalityOrder::Standard;
    if (order == "po") return MinimalityOrder::Po;
    throw UsageError("unknown order '" + order + "'");
}

Assignment load_assignment(const std::string& text, const Graph& g) {
    Assignment f = Assignment::parse(text);
    if (f.size() != g.order())
        throw UsageError("assignment has length " + std::to_string(f.size()) + ", graph has order " +
                         std::to_string(g.order()));
    return f;
}

// Runs one enumeration mode, streaming each solution to sink.
EnumStats run_mode(const Graph& g, const std::string& mode, MinimalityOrder order, bool assert_invariants,
                   std::size_t oracle_cap, const AssignmentSink& sink) {
    if (mode == "refined") {
        if (order == MinimalityOrder::Po) throw UsageError("refined enumeration is only defined for the standard order");
        RefinedOptions options;
        options.check_invariants = assert_invariants;
        return enumerate_minimal_rdf_refined(g, sink, options);
    }
    if (mode == "simple") {
        return order == MinimalityOrder::Standard ? enumerate_minimal_rdf_simple(g, sink)
                                                  : enumerate_po_minimal_simple(g, sink);
    }
    if (mode == "oracle") {
        const auto start = std::chrono::steady_clock::now();
        BruteForceOracle oracle(g, order, oracle_cap);
        for (const auto& f : oracle.minimal()) sink(f);
        EnumStats stats;
        stats.solutions = oracle.minimal().size();
        stats.tree_nodes = oracle.assignments_examined();
        // Nothing is emitted before the whole sweep is done.
        stats.max_gap = oracle.assignments_examined();
        stats.wall_ms = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
        return stats;
    }
    throw UsageError("unknown mode '" + mode + "'");
}

nlohmann::json stats_json(const EnumStats& s) {
    return {{"solutions", s.solutions}, {"tree_nodes", s.tree_nodes}, {"max_gap", s.max_gap}, {"wall_ms", s.wall_ms}};
}

Graph generate(const std::string& family, const std::vector<std::string>& params, std::uint64_t seed) {
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw UsageError(family + " takes " + std::to_string(count) + " parameter(s), got " +
                             std::to_string(params.size()));
    };
    auto size_param = [&](std::size_t i) -> std::size_t {
        try {
            std::size_t used = 0;
            auto value = std::stoull(params[i], &used);
            if (used != params[i].size() || params[i].front() == '-') throw std::invalid_argument("");
            return static_cast<std::size_t>(value);
        } catch (const std::exception&) {
            throw UsageError("expected a non-negative integer, got '" + params[i] + "'");
        }
    };
    try {
        if (family == "cycle") {
            need(1);
            return gen_cycle(size_param(0));
        }
        if (family == "star") {
            need(1);
            return gen_star(size_param(0));
        }
        if (family == "null") {
            need(1);
            return gen_null(size_param(0));
        }
        if (family == "path") {
            need(1);
            return gen_path(size_param(0));
        }
        if (family == "complete") {
            need(1);
            return gen_complete(size_param(0));
        }
        if (family == "c5pow") {
            need(1);
            return gen_c5_power(size_param(0));
        }
        if (family == "random") {
            need(2);
            double p = 0;
            try {
                p = std::stod(params[1]);
            } catch (const std::exception&) {
                throw UsageError("expected a probability, got '" + params[1] + "'");
            }
            return gen_random(size_param(0), p, seed);
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown family '" + family + "'");
}

std::string join(const std::vector<std::string>& items) {
    std::string s;
    for (const auto& item : items) s += (s.empty() ? "" : ", ") + item;
    return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimal Roman dominating functions: enumeration, extension and checks"};
    app.require_subcommand(1);

    std::string graph_path;
    std::string mode;
    std::string order_name = "standard";
    std::string stats_format;
    bool count_only = false;
    bool sorted = false;
    bool assert_invariants = false;
    std::size_t oracle_cap = kDefaultOracleCap;
    auto* enumerate = app.add_subcommand("enumerate", "List all (PO-)minimal rdfs, one per line");
    enumerate->add_option("graph", graph_path, "Edge-list file, '-' for stdin")->required();
    enumerate->add_option("--mode", mode, "simple, refined or oracle (default: refined, simple for --order po)");
    enumerate->add_option("--order", order_name, "standard or po");
    enumerate->add_option("--stats", stats_format, "Write run statistics to stderr (json)")
        ->check(CLI::IsMember({"json"}));
    enumerate->add_flag("--count-only", count_only, "Print only the number of solutions");
    enumerate->add_flag("--sorted", sorted, "Print solutions in lexicographic order");
    enumerate->add_flag("--assert-invariants", assert_invariants, "Check search invariants (refined mode)");
    enumerate->add_option("--oracle-cap", oracle_cap, "Largest order the oracle accepts");

    std::string assignment_text;
    std::vector<VertexId> forbidden;
    auto* extend = app.add_subcommand("extend", "Decide whether an assignment extends to a (PO-)minimal rdf");
    extend->add_option("graph", graph_path)->required();
    extend->add_option("assignment", assignment_text, "String over {0,1,2}, vertex 0 first")->required();
    extend->add_option("--forbidden", forbidden, "Vertices that must not receive 2")->delimiter(',');
    extend->add_option("--order", order_name, "standard or po");

    auto* check = app.add_subcommand("check", "Report which minimality conditions an assignment meets");
    check->add_option("graph", graph_path)->required();
    check->add_option("assignment", assignment_text)->required();
    check->add_option("--order", order_name, "standard or po");

    std::string family;
    std::vector<std::string> params;
    std::uint64_t seed = 1;
    auto* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
    gen->add_option("family", family, "cycle, star, null, path, complete, c5pow or random")->required();
    gen->add_option("params", params, "Family parameters (random: n p)");
    gen->add_option("--seed", seed, "Seed for random graphs");

    std::size_t from = 0;
    std::size_t to = 0;
    double probability = 0.5;
    std::vector<std::string> modes;
    auto* bench = app.add_subcommand("bench", "CSV of enumeration runs over a graph family");
    bench->add_option("family", family, "cycle, star, null, path, complete, c5pow or random")->required();
    bench->add_option("from", from, "First family parameter")->required();
    bench->add_option("to", to, "Last family parameter")->required();
    bench->add_option("--modes", modes, "Comma list of simple, refined, oracle, po")->delimiter(',')->required();
    bench->add_option("--p", probability, "Edge probability for random graphs");
    bench->add_option("--seed", seed, "Seed for random graphs");
    bench->add_flag("--assert-invariants", assert_invariants);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitYes;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitYes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*enumerate) {
            const auto order = parse_order(order_name);
            if (mode.empty()) mode = order == MinimalityOrder::Standard ? "refined" : "simple";
            const Graph g = load_graph(graph_path, in);
            std::vector<std::string> collected;
            AssignmentSink sink = [&](const Assignment& f) {
                if (count_only) return;
                if (sorted) {
                    collected.push_back(f.to_string());
                } else {
                    out << f.to_string() << '\n' << std::flush;
                }
            };
            const EnumStats stats = run_mode(g, mode, order, assert_invariants, oracle_cap, sink);
            if (sorted) {
                std::sort(collected.begin(), collected.end());
                for (const auto& line : collected) out << line << '\n';
            }
            if (count_only) out << stats.solutions << '\n';
            if (!stats_format.empty()) err << stats_json(stats).dump() << '\n';
            return kExitYes;
        }

        if (*extend) {
            const auto order = parse_order(order_name);
            const Graph g = load_graph(graph_path, in);
            Assignment f = load_assignment(assignment_text, g);
            VertexSet banned(g.order());
            for (VertexId v : forbidden) {
                if (v >= g.order()) throw UsageError("forbidden vertex " + std::to_string(v) + " out of range");
                banned.insert(v);
            }
            std::optional<Assignment> witness;
            try {
                ExtensionInstance inst(g, std::move(f), std::move(banned));
                witness = order == MinimalityOrder::Standard ? gen_ext_rd(inst) : gen_ext_po_rd(inst);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            if (!witness) {
                out << "NO\n";
                return kExitNo;
            }
            out << "YES " << witness->to_string() << '\n';
            return kExitYes;
        }

        if (*check) {
            const auto order = parse_order(order_name);
            const Graph g = load_graph(graph_path, in);
            const Assignment f = load_assignment(assignment_text, g);
            const MinimalityReport report =
                order == MinimalityOrder::Standard ? check_minimal_rdf(g, f) : check_po_minimal_rdf(g, f);
            out << (report.holds() ? "minimal" : "not minimal") << '\n';
            out << "rdf: " << (is_rdf(g, f) ? "yes" : "no") << '\n';
            auto line = [&](std::string_view name, bool holds) { out << name << ": " << (holds ? "pass" : "FAIL") << '\n'; };
            line(kConditionNoOneNextToTwo, report.no_one_next_to_two);
            if (order == MinimalityOrder::Standard) line(kConditionPrivacy, report.privacy);
            line(kConditionMinimalDominating, report.minimal_dominating);
            if (!report.holds()) out << "failed: " << join(report.failed_conditions()) << '\n';
            return report.holds() ? kExitYes : kExitNo;
        }

        if (*gen) {
            out << to_edge_list(generate(family, params, seed));
            return kExitYes;
        }

        if (*bench) {
            if (modes.empty()) throw UsageError("empty mode list");
            if (from > to) throw UsageError("empty parameter range");
            out << "n,mode,solutions,tree_nodes,max_gap,wall_ms\n";
            for (std::size_t k = from; k <= to; ++k) {
                std::vector<std::string> family_params{std::to_string(k)};
                if (family == "random") family_params.push_back(std::to_string(probability));
                const Graph g = generate(family, family_params, seed);
                for (const auto& m : modes) {
                    const bool po = m == "po";
                    const EnumStats s = run_mode(g, po ? "simple" : m,
                                                 po ? MinimalityOrder::Po : MinimalityOrder::Standard,
                                                 assert_invariants, kDefaultOracleCap, [](const Assignment&) {});
                    out << g.order() << ',' << m << ',' << s.solutions << ',' << s.tree_nodes << ',' << s.max_gap
                        << ',' << s.wall_ms << '\n'
                        << std::flush;
                }
            }
            return kExitYes;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace romdom::cli
