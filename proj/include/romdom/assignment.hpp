#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "romdom/graph.hpp"
#include "romdom/vertex_set.hpp"

namespace romdom {

// Total function V -> {0,1,2}. Text form is one digit per vertex, vertex 0 first.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(std::size_t n, std::uint8_t fill = 0) : values_(n, fill) {}
    explicit Assignment(std::vector<std::uint8_t> values);

    // Throws std::invalid_argument on characters outside {0,1,2}.
    static Assignment parse(std::string_view text);
    std::string to_string() const;

    std::size_t size() const { return values_.size(); }
    std::uint8_t operator[](VertexId v) const { return values_[v]; }
    void set(VertexId v, std::uint8_t value);

    // V_i(f) for i in {0,1,2}.
    VertexSet level_set(std::uint8_t value) const;

    const std::vector<std::uint8_t>& values() const { return values_; }

    auto operator<=>(const Assignment&) const = default;

private:
    std::vector<std::uint8_t> values_;
};

struct LevelSets {
    VertexSet v0, v1, v2;
};

LevelSets level_sets(const Assignment& f);

// |V1| + 2|V2|
std::size_t weight(const Assignment& f);

// Every 0-vertex has a neighbor valued 2.
bool is_rdf(const Graph& g, const Assignment& f);

// P_{G,D}(v) = N[v] \ N[D \ {v}]. Throws std::invalid_argument if v is not in d.
VertexSet private_neighbors(const Graph& g, const VertexSet& d, VertexId v);

// Outcome of the structural minimality test. For the PO order the privacy condition is not part
// of the characterization and is reported as holding.
struct MinimalityReport {
    bool no_one_next_to_two = true;  // N[V2] ∩ V1 = ∅
    bool privacy = true;             // every 2-vertex keeps a private neighbor other than itself in G[V0 ∪ V2]
    bool minimal_dominating = true;  // V2 is a minimal dominating set of G[V0 ∪ V2]

    bool holds() const { return no_one_next_to_two && privacy && minimal_dominating; }
    std::vector<std::string> failed_conditions() const;
};

inline constexpr std::string_view kConditionNoOneNextToTwo = "N[V2]∩V1";
inline constexpr std::string_view kConditionPrivacy = "privacy condition";
inline constexpr std::string_view kConditionMinimalDominating = "minimal dominating set";

MinimalityReport check_minimal_rdf(const Graph& g, const Assignment& f);
MinimalityReport check_po_minimal_rdf(const Graph& g, const Assignment& f);

// Minimal under the pointwise order induced by 0 < 1 < 2.
inline bool is_minimal_rdf(const Graph& g, const Assignment& f) { return check_minimal_rdf(g, f).holds(); }
// Minimal under the pointwise order induced by 0 < 1, 0 < 2 with 1 and 2 incomparable.
inline bool is_po_minimal_rdf(const Graph& g, const Assignment& f) { return check_po_minimal_rdf(g, f).holds(); }

bool leq_standard(const Assignment& f, const Assignment& h);
// f ≤_PO h iff V1(f) ⊆ V1(h) and V2(f) ⊆ V2(h).
bool leq_po(const Assignment& f, const Assignment& h);

}  // namespace romdom
