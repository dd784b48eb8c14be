#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "romdom/enum_refined.hpp"
#include "romdom/enum_simple.hpp"
#include "romdom/extension.hpp"
#include "romdom/oracle.hpp"
#include "support/catalog.hpp"

using namespace romdom;
using romdom::testing::collect;

namespace {

std::vector<std::string> refined(const Graph& g, EnumStats* stats = nullptr, bool check = true) {
    RefinedOptions options;
    options.check_invariants = check;
    return collect([&](const AssignmentSink& s) { return enumerate_minimal_rdf_refined(g, s, options); }, stats);
}

std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("reductions: LPN fires before V2") {
    auto p2 = gen_path(2);
    WorkingGraph g(p2);
    auto f = Grdf::parse("2.");
    auto trace = apply_reductions(g, f);
    CHECK(f.to_string() == "20");
    REQUIRE(trace.size() == 1);
    CHECK(trace[0].rule == Rule::LastPotentialPrivateNeighbor);
    CHECK(trace[0].vertex == 1);
}

TEST_CASE("reductions: V2 rule marks active neighbors") {
    // Star center set to 2: three active rays, so LPN does not apply.
    WorkingGraph g(gen_star(3));
    auto f = Grdf::parse("2...");
    auto trace = apply_reductions(g, f);
    CHECK(f.to_string() == "2000");
    CHECK(std::count_if(trace.begin(), trace.end(), [](const ReductionStep& s) { return s.rule == Rule::Two; }) == 3);
}

TEST_CASE("reductions: trapped NotTwo vertices become 1") {
    auto p2 = gen_path(2);
    WorkingGraph g(p2);
    auto f = Grdf::parse("yy");
    auto trace = apply_reductions(g, f);
    CHECK(f.to_string() == "11");
    CHECK_FALSE(g.adjacent(0, 1));
    std::vector<Rule> rules;
    for (const auto& step : trace) rules.push_back(step.rule);
    CHECK(rules == std::vector<Rule>{Rule::NoPotentialDomination, Rule::NoPotentialDomination, Rule::Edges});
    g.rollback(0);
    CHECK(g.adjacent(0, 1));
}

TEST_CASE("reductions: fixpoint input is unchanged") {
    WorkingGraph g(gen_cycle(5));
    auto f = Grdf::parse("20110");
    // Edges between the 0/1 vertices go first; afterwards nothing fires.
    apply_reductions(g, f);
    const auto before = f;
    auto trace = apply_reductions(g, f);
    CHECK(trace.empty());
    CHECK(f == before);
}

TEST_CASE("reductions: rules V0, V1, NPN and Isolate") {
    SUBCASE("V1 pushes neighbors") {
        WorkingGraph g(gen_path(3));
        auto f = Grdf::parse(".1.");
        apply_reductions(g, f);
        CHECK(f.to_string() == "111");
    }
    SUBCASE("NPN on an isolated active vertex") {
        WorkingGraph g(gen_null(1));
        auto f = Grdf::parse(".");
        auto trace = apply_reductions(g, f);
        CHECK(f.to_string() == "1");
        REQUIRE(trace.size() == 2);
        CHECK(trace[0].rule == Rule::NoPrivateNeighbor);
        CHECK(trace[1].rule == Rule::NoPotentialDomination);
    }
    SUBCASE("V0 keeps the only private neighbor private") {
        const std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 4}};
        WorkingGraph g(Graph(5, edges));
        auto f = Grdf::parse("20...");
        auto trace = apply_reductions(g, f);
        REQUIRE_FALSE(trace.empty());
        CHECK(trace[0].rule == Rule::Zero);
        CHECK(trace[0].vertex == 4);
        CHECK(trace[0].label == Label::NotTwo);
    }
    SUBCASE("Isolate settles NotOne vertices once A is empty") {
        WorkingGraph g(gen_path(3));
        auto f = Grdf::parse("x2x");
        auto trace = apply_reductions(g, f);
        // The 2 in the middle has no private neighbor left: LPN cannot fire, Isolate sets both ends.
        CHECK(f.to_string() == "020");
        CHECK(trace.size() == 2);
        CHECK(trace[0].rule == Rule::Isolate);
    }
}

TEST_CASE("pick_branch_vertex") {
    auto c5 = gen_cycle(5);
    WorkingGraph g(c5);
    auto choice = pick_branch_vertex(g, Grdf(5));
    REQUIRE(choice);
    CHECK(choice->vertex == 0);
    CHECK(choice->priority == 1);

    choice = pick_branch_vertex(g, Grdf::parse("000x0"));
    REQUIRE(choice);
    CHECK(choice->vertex == 3);
    CHECK(choice->priority == 3);

    CHECK_FALSE(pick_branch_vertex(g, Grdf::parse("20110")));

    // Path 0-1-2: only vertex 1 has two open neighbors.
    WorkingGraph p3(gen_path(3));
    choice = pick_branch_vertex(p3, Grdf(3));
    REQUIRE(choice);
    CHECK(choice->vertex == 1);
    CHECK(choice->priority == 1);

    choice = pick_branch_vertex(p3, Grdf::parse("0.0"));
    REQUIRE(choice);
    CHECK(choice->vertex == 1);
    CHECK(choice->priority == 2);

    // NotOne vertices with exactly two NotTwo neighbors come last.
    const std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 3}};
    WorkingGraph h(Graph(4, edges));
    choice = pick_branch_vertex(h, Grdf::parse("xyyx"));
    REQUIRE(choice);
    CHECK(choice->vertex == 3);
}

TEST_CASE("branch operations") {
    auto f = Grdf::parse(".x0");
    CHECK(branch_set_two(f, 0).to_string() == "2x0");
    CHECK(branch_deny_two(f, 0).to_string() == "yx0");
    CHECK(branch_set_two(f, 1).to_string() == ".20");
    CHECK(branch_deny_two(f, 1).to_string() == ".00");
    CHECK_THROWS_AS(branch_set_two(f, 2), std::invalid_argument);
    CHECK_THROWS_AS(branch_deny_two(f, 2), std::invalid_argument);
}

TEST_CASE("measure") {
    CHECK(measure(Grdf(7)) == doctest::Approx(7.0));
    CHECK(measure(Grdf::parse("20110")) == doctest::Approx(0.0));
    CHECK(measure(Grdf::parse("xy")) == doctest::Approx(2.0 / 3.0 + 0.38488));
    CHECK(measure(Grdf::parse("xy."), 0.5, 0.25) == doctest::Approx(1.75));
}

TEST_CASE("check_phase_properties") {
    auto c5 = gen_cycle(5);
    WorkingGraph g(c5);
    CHECK(check_phase_properties(g, Grdf(5), 0));

    WorkingGraph leaf_graph(c5);
    auto leaf = Grdf::parse("20200");
    apply_reductions(leaf_graph, leaf);
    CHECK(check_phase_properties(leaf_graph, leaf, 3));
    CHECK_FALSE(check_phase_properties(leaf_graph, Grdf::parse("2020x"), 3));

    // A surviving active vertex after phase 2.
    WorkingGraph star(gen_star(2));
    CHECK(check_phase_properties(star, Grdf::parse("xyy"), 2));
    CHECK_FALSE(check_phase_properties(star, Grdf::parse("xy."), 2));
    CHECK_THROWS_AS(check_phase_properties(star, Grdf(3), 4), std::invalid_argument);
}

TEST_CASE("refined enumeration examples") {
    EnumStats stats;
    auto c5 = refined(gen_cycle(5), &stats);
    CHECK(c5.size() == 16);
    CHECK(stats.max_gap <= 10);
    auto simple = collect([&](const AssignmentSink& s) { return enumerate_minimal_rdf_simple(gen_cycle(5), s); });
    CHECK(sorted(c5) == sorted(simple));

    auto star = gen_star(3);
    CHECK(sorted(refined(star)) == romdom::testing::to_strings(brute_minimal_rdfs(star, MinimalityOrder::Standard)));
    CHECK(refined(gen_null(4)) == std::vector<std::string>{"1111"});
    CHECK(refined(gen_null(0)) == std::vector<std::string>{""});
}

namespace {

void check_graph(const Graph& g) {
    EnumStats stats;
    auto out = refined(g, &stats);
    CHECK(std::set<std::string>(out.begin(), out.end()).size() == out.size());
    CHECK(sorted(out) == romdom::testing::to_strings(brute_minimal_rdfs(g, MinimalityOrder::Standard)));
    CHECK(stats.solutions == out.size());
    CHECK(stats.max_gap <= 2 * g.order());
    CHECK(static_cast<double>(stats.tree_nodes) <= 50.0 * std::pow(1.9332, g.order()));
}

}  // namespace

TEST_CASE("refined enumeration matches the oracle on the connected catalog") {
    for (const auto& g : romdom::testing::connected_catalog(6)) check_graph(g);
}

TEST_CASE("refined enumeration matches the oracle on random graphs up to order 8") {
    for (const auto& g : romdom::testing::random_catalog(80, 8, 41)) check_graph(g);
}

namespace {

std::set<Assignment> consistent(const std::vector<Assignment>& minimal, const Grdf& f) {
    std::set<Assignment> out;
    for (const auto& h : minimal)
        if (is_consistent(h, f)) out.insert(h);
    return out;
}

}  // namespace

TEST_CASE("reductions are sound, replayable and keep the invariants along random search paths") {
    std::mt19937_64 rng(8);
    for (const auto& g : romdom::testing::random_catalog(60, 8, 9)) {
        const auto minimal = brute_minimal_rdfs(g, MinimalityOrder::Standard);
        for (int walk = 0; walk < 6; ++walk) {
            WorkingGraph work(g);
            Grdf f(g.order());
            while (auto choice = pick_branch_vertex(work, f)) {
                const double mu = measure(f);
                Grdf child = (rng() & 1U) ? branch_set_two(f, choice->vertex) : branch_deny_two(f, choice->vertex);
                const Grdf pre = child;
                WorkingGraph pre_graph = work;
                auto trace = apply_reductions(work, child);

                CHECK(consistent(minimal, pre) == consistent(minimal, child));
                CHECK_FALSE(violated_invariant(work, child).has_value());
                CHECK(measure(child) < mu);

                Grdf replayed = pre;
                replay(pre_graph, replayed, trace);
                CHECK(replayed == child);
                for (VertexId v = 0; v < g.order(); ++v) CHECK(pre_graph.neighbors(v) == work.neighbors(v));

                // Consistent minimal rdfs exist iff the extension test says so.
                CHECK(gen_ext_rd(project_grdf(g, child)).has_value() == !consistent(minimal, child).empty());
                if (!gen_ext_rd(project_grdf(g, child))) break;
                f = child;
            }
        }
    }
}
