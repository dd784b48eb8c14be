#include "romdom/assignment.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace romdom {

Assignment::Assignment(std::vector<std::uint8_t> values) : values_(std::move(values)) {
    for (auto x : values_)
        if (x > 2) throw std::invalid_argument("assignment value out of {0,1,2}");
}

Assignment Assignment::parse(std::string_view text) {
    std::vector<std::uint8_t> values;
    values.reserve(text.size());
    for (char c : text) {
        if (c < '0' || c > '2')
            throw std::invalid_argument(std::string("invalid assignment character '") + c + "'");
        values.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return Assignment(std::move(values));
}

std::string Assignment::to_string() const {
    std::string s(values_.size(), '0');
    for (std::size_t i = 0; i < values_.size(); ++i) s[i] = static_cast<char>('0' + values_[i]);
    return s;
}

void Assignment::set(VertexId v, std::uint8_t value) {
    if (value > 2) throw std::invalid_argument("assignment value out of {0,1,2}");
    values_[v] = value;
}

VertexSet Assignment::level_set(std::uint8_t value) const {
    VertexSet s(values_.size());
    for (VertexId v = 0; v < values_.size(); ++v)
        if (values_[v] == value) s.insert(v);
    return s;
}

LevelSets level_sets(const Assignment& f) { return {f.level_set(0), f.level_set(1), f.level_set(2)}; }

std::size_t weight(const Assignment& f) {
    std::size_t w = 0;
    for (auto x : f.values()) w += x;
    return w;
}

bool is_rdf(const Graph& g, const Assignment& f) {
    assert(f.size() == g.order());
    for (VertexId v = 0; v < g.order(); ++v) {
        if (f[v] != 0) continue;
        auto nb = g.neighbors(v);
        if (std::none_of(nb.begin(), nb.end(), [&](VertexId u) { return f[u] == 2; })) return false;
    }
    return true;
}

namespace {

// P_{G[within],D}(v) for D ⊆ within and v ∈ D.
VertexSet private_neighbors_within(const Graph& g, const VertexSet& d, VertexId v, const VertexSet& within) {
    VertexSet others = d;
    others.erase(v);
    VertexSet result = g.closed_neighborhood(v) & within;
    result -= closed_neighborhood(g, others) & within;
    return result;
}

}  // namespace

VertexSet private_neighbors(const Graph& g, const VertexSet& d, VertexId v) {
    if (!d.contains(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " is not in the set");
    return private_neighbors_within(g, d, v, g.all_vertices());
}

std::vector<std::string> MinimalityReport::failed_conditions() const {
    std::vector<std::string> out;
    if (!no_one_next_to_two) out.emplace_back(kConditionNoOneNextToTwo);
    if (!privacy) out.emplace_back(kConditionPrivacy);
    if (!minimal_dominating) out.emplace_back(kConditionMinimalDominating);
    return out;
}

MinimalityReport check_minimal_rdf(const Graph& g, const Assignment& f) {
    assert(f.size() == g.order());
    auto [v0, v1, v2] = level_sets(f);
    const VertexSet reduced = v0 | v2;  // vertex set of G' = G[V0 ∪ V2]

    MinimalityReport report;
    report.no_one_next_to_two = !closed_neighborhood(g, v2).intersects(v1);

    bool dominates = true;
    for (VertexId u : v0)
        if (!g.open_neighborhood(u).intersects(v2)) dominates = false;

    bool every_private = true;
    for (VertexId v : v2) {
        auto priv = private_neighbors_within(g, v2, v, reduced);
        if (priv.empty()) every_private = false;
        priv.erase(v);
        if (priv.empty()) report.privacy = false;
    }
    report.minimal_dominating = dominates && every_private;
    return report;
}

MinimalityReport check_po_minimal_rdf(const Graph& g, const Assignment& f) {
    auto report = check_minimal_rdf(g, f);
    report.privacy = true;
    return report;
}

bool leq_standard(const Assignment& f, const Assignment& h) {
    assert(f.size() == h.size());
    for (VertexId v = 0; v < f.size(); ++v)
        if (f[v] > h[v]) return false;
    return true;
}

bool leq_po(const Assignment& f, const Assignment& h) {
    assert(f.size() == h.size());
    for (VertexId v = 0; v < f.size(); ++v)
        if (f[v] != 0 && f[v] != h[v]) return false;
    return true;
}

}  // namespace romdom
