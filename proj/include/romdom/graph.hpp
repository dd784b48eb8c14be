#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "romdom/vertex_set.hpp"

namespace romdom {

using Edge = std::pair<VertexId, VertexId>;

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
    Graph() = default;
    // Duplicate edges are collapsed; self-loops and out-of-range ids throw std::invalid_argument.
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const VertexId> neighbors(VertexId v) const { return adj_[v]; }
    const VertexSet& open_neighborhood(VertexId v) const { return open_[v]; }
    VertexSet closed_neighborhood(VertexId v) const;
    std::size_t degree(VertexId v) const { return adj_[v].size(); }
    bool adjacent(VertexId u, VertexId v) const { return open_[u].contains(v); }

    VertexSet empty_set() const { return VertexSet(order()); }
    VertexSet all_vertices() const { return VertexSet::full(order()); }

    // Edges (u, v) with u < v in ascending order.
    std::vector<Edge> edges() const;

private:
    std::vector<std::vector<VertexId>> adj_;
    std::vector<VertexSet> open_;
    std::size_t edge_count_ = 0;
};

// N[S]: S together with every neighbor of a member of S.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

// Checks symmetry, irreflexivity and id range of the adjacency structure.
bool is_well_formed(const Graph& g);

// Edge-list text: first non-comment line "n m", then m lines "u v". Lines starting with '#'
// and blank lines are skipped; "\r\n" line ends are accepted.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

Graph gen_cycle(std::size_t k);
// K_{1,rays}; the center is vertex 0.
Graph gen_star(std::size_t rays);
Graph gen_null(std::size_t n);
Graph gen_path(std::size_t n);
Graph gen_complete(std::size_t n);
// Parts are relabeled consecutively in the given order.
Graph gen_disjoint_union(std::span<const Graph> parts);
// c disjoint copies of C5.
Graph gen_c5_power(std::size_t copies);
// G(n, p) with a deterministic 64-bit Mersenne Twister stream.
Graph gen_random(std::size_t n, double p, std::uint64_t seed);

}  // namespace romdom
