#include "romdom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>

namespace romdom {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n), open_(n, VertexSet(n)) {
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range for order " + std::to_string(n));
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (open_[u].contains(v)) continue;
        open_[u].insert(v);
        open_[v].insert(u);
        ++edge_count_;
    }
    for (std::size_t v = 0; v < n; ++v) adj_[v] = open_[v].to_vector();
}

VertexSet Graph::closed_neighborhood(VertexId v) const {
    VertexSet s = open_[v];
    s.insert(v);
    return s;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < order(); ++u)
        for (VertexId v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out = s;
    for (VertexId u : s) out |= g.open_neighborhood(u);
    return out;
}

bool is_well_formed(const Graph& g) {
    const auto n = g.order();
    std::size_t degree_sum = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (g.open_neighborhood(v).capacity() != n) return false;
        for (VertexId u : g.neighbors(v)) {
            if (u >= n || u == v || !g.adjacent(u, v)) return false;
        }
        if (g.open_neighborhood(v).size() != g.degree(v)) return false;
        degree_sum += g.degree(v);
    }
    return degree_sum == 2 * g.edge_count();
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::size_t parse_count(std::string_view field, std::size_t line_no) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(field) + "'");
    return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::size_t n = 0;
    std::size_t m = 0;
    bool have_header = false;
    std::vector<Edge> edges;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        auto line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        auto fields = split_fields(line);
        if (fields.empty() || fields.front().front() == '#') continue;
        if (fields.size() != 2) throw ParseError(line_no, "expected two fields, got " + std::to_string(fields.size()));

        auto a = parse_count(fields[0], line_no);
        auto b = parse_count(fields[1], line_no);
        if (!have_header) {
            n = a;
            m = b;
            have_header = true;
            edges.reserve(m);
            continue;
        }
        if (edges.size() == m) throw ParseError(line_no, "more than the declared " + std::to_string(m) + " edges");
        if (a >= n || b >= n) throw ParseError(line_no, "vertex id out of range [0, " + std::to_string(n) + ")");
        if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
        edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }
    if (!have_header) throw ParseError(line_no, "missing 'n m' header");
    if (edges.size() != m)
        throw ParseError(line_no, "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph gen_cycle(std::size_t k) {
    if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < k; ++i)
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % k));
    return Graph(k, edges);
}

Graph gen_star(std::size_t rays) {
    if (rays < 1) throw std::invalid_argument("star needs at least one ray");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= rays; ++i) edges.emplace_back(0, static_cast<VertexId>(i));
    return Graph(rays + 1, edges);
}

Graph gen_null(std::size_t n) { return Graph(n, {}); }

Graph gen_path(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) edges.emplace_back(static_cast<VertexId>(i - 1), static_cast<VertexId>(i));
    return Graph(n, edges);
}

Graph gen_complete(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    return Graph(n, edges);
}

Graph gen_disjoint_union(std::span<const Graph> parts) {
    std::size_t offset = 0;
    std::vector<Edge> edges;
    for (const auto& part : parts) {
        for (auto [u, v] : part.edges())
            edges.emplace_back(static_cast<VertexId>(u + offset), static_cast<VertexId>(v + offset));
        offset += part.order();
    }
    return Graph(offset, edges);
}

Graph gen_c5_power(std::size_t copies) {
    std::vector<Graph> parts(copies, gen_cycle(5));
    return gen_disjoint_union(parts);
}

Graph gen_random(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            // 53 high bits -> [0, 1); independent of the standard library's distribution code.
            double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (x < p) edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
        }
    return Graph(n, edges);
}

}  // namespace romdom
