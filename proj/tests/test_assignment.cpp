#include <doctest.h>

#include <set>

#include "romdom/assignment.hpp"
#include "romdom/oracle.hpp"
#include "support/catalog.hpp"

using namespace romdom;
using romdom::testing::all_assignments;

namespace {
Assignment A(const char* s) { return Assignment::parse(s); }
}  // namespace

TEST_CASE("weight") {
    for (std::size_t rays : {1U, 3U, 7U}) {
        Assignment f(rays + 1);
        f.set(0, 2);
        CHECK(weight(f) == 2);
        CHECK(weight(Assignment(rays + 1, 1)) == rays + 1);
    }
    CHECK(weight(Assignment(6, 0)) == 0);
    CHECK(weight(A("20110")) == 4);
}

TEST_CASE("assignment text form") {
    CHECK(A("20110").to_string() == "20110");
    CHECK(A("").size() == 0);
    CHECK_THROWS_AS(A("013"), std::invalid_argument);
    auto sets = level_sets(A("20110"));
    CHECK(sets.v0.to_vector() == std::vector<VertexId>{1, 4});
    CHECK(sets.v1.to_vector() == std::vector<VertexId>{2, 3});
    CHECK(sets.v2.to_vector() == std::vector<VertexId>{0});
}

TEST_CASE("is_rdf") {
    auto p2 = gen_path(2);
    CHECK(is_rdf(p2, A("20")));
    CHECK_FALSE(is_rdf(p2, A("01")));
    CHECK(is_rdf(gen_cycle(5), A("20110")));
    CHECK_FALSE(is_rdf(gen_cycle(5), A("20100")));
}

TEST_CASE("private_neighbors") {
    auto p2 = gen_path(2);
    CHECK(private_neighbors(p2, VertexSet(2, {0}), 0) == VertexSet(2, {0, 1}));
    CHECK(private_neighbors(p2, VertexSet(2, {0, 1}), 0).empty());
    CHECK(private_neighbors(gen_cycle(5), VertexSet(5, {0, 2}), 0) == VertexSet(5, {4, 0}));
    CHECK_THROWS_AS(private_neighbors(p2, VertexSet(2, {1}), 0), std::invalid_argument);
}

TEST_CASE("is_minimal_rdf on named examples") {
    CHECK(is_minimal_rdf(gen_cycle(5), A("20200")));
    CHECK(is_minimal_rdf(gen_cycle(5), A("20110")));
    CHECK(is_minimal_rdf(gen_cycle(5), A("22010")));
    CHECK_FALSE(is_minimal_rdf(gen_path(2), A("22")));
    CHECK(is_minimal_rdf(gen_null(1), A("1")));
    CHECK_FALSE(is_minimal_rdf(gen_null(1), A("2")));

    auto report = check_minimal_rdf(gen_path(2), A("22"));
    CHECK(report.no_one_next_to_two);
    CHECK_FALSE(report.privacy);
    CHECK(report.failed_conditions().front() == "privacy condition");

    report = check_minimal_rdf(gen_path(2), A("12"));
    CHECK_FALSE(report.no_one_next_to_two);
    CHECK(report.failed_conditions().front() == "N[V2]∩V1");
}

TEST_CASE("is_po_minimal_rdf on named examples") {
    for (const char* f : {"11", "12", "21", "22"}) CHECK(is_po_minimal_rdf(gen_null(2), A(f)));
    CHECK_FALSE(is_po_minimal_rdf(gen_path(2), A("22")));
    CHECK(is_po_minimal_rdf(gen_cycle(5), A("11111")));
    CHECK(is_po_minimal_rdf(gen_null(1), A("2")));
}

TEST_CASE("orders") {
    CHECK(leq_standard(A("01"), A("21")));
    CHECK_FALSE(leq_po(A("10"), A("20")));
    CHECK(leq_po(A("00"), A("20")));
    CHECK_FALSE(leq_standard(A("20"), A("10")));
    for (const char* s : {"", "0", "120", "2211"}) {
        CHECK(leq_standard(A(s), A(s)));
        CHECK(leq_po(A(s), A(s)));
    }
    // ≤_PO refines ≤.
    for (const auto& f : all_assignments(3))
        for (const auto& h : all_assignments(3))
            if (leq_po(f, h)) CHECK(leq_standard(f, h));
}

namespace {

void check_against_oracle(const Graph& g) {
    const BruteForceOracle standard(g, MinimalityOrder::Standard);
    const BruteForceOracle po(g, MinimalityOrder::Po);
    const std::set<Assignment> min_std(standard.minimal().begin(), standard.minimal().end());
    const std::set<Assignment> min_po(po.minimal().begin(), po.minimal().end());

    std::set<std::vector<VertexId>> v2_seen;
    for (const auto& f : all_assignments(g.order())) {
        const bool minimal = is_minimal_rdf(g, f);
        const bool po_minimal = is_po_minimal_rdf(g, f);
        CHECK(minimal == min_std.contains(f));
        CHECK(po_minimal == min_po.contains(f));
        if (minimal) {
            CHECK(is_rdf(g, f));
            const auto v2 = f.level_set(2);
            CHECK(2 * v2.size() <= g.order());
            CHECK(v2_seen.insert(v2.to_vector()).second);
        }
        if (po_minimal) CHECK(is_rdf(g, f));
    }
}

}  // namespace

TEST_CASE("characterizations agree with the definition on the connected catalog") {
    for (const auto& g : romdom::testing::connected_catalog(6)) check_against_oracle(g);
}

TEST_CASE("characterizations agree with the definition on random graphs up to order 8") {
    for (const auto& g : romdom::testing::random_catalog(40, 8, 2024)) check_against_oracle(g);
    check_against_oracle(gen_null(4));
    check_against_oracle(gen_star(5));
}
