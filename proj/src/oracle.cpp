#include "romdom/oracle.hpp"

#include <algorithm>
#include <cstdint>

namespace romdom {

namespace {

using Code = std::uint32_t;

std::vector<std::uint8_t> decode(Code code, std::size_t n) {
    std::vector<std::uint8_t> digits(n);
    for (std::size_t i = 0; i < n; ++i) {
        digits[i] = static_cast<std::uint8_t>(code % 3);
        code /= 3;
    }
    return digits;
}

bool dominated_by_definition(const Graph& g, const std::vector<std::uint8_t>& f) {
    for (VertexId v = 0; v < g.order(); ++v) {
        if (f[v] != 0) continue;
        bool found = false;
        for (VertexId u : g.neighbors(v)) found = found || f[u] == 2;
        if (!found) return false;
    }
    return true;
}

// Does some rdf g ≠ f lie below f? Walks every g below f in mixed radix.
bool has_rdf_below(const std::vector<std::uint8_t>& f, const std::vector<Code>& power, const std::vector<bool>& is_rdf,
                   MinimalityOrder order) {
    const std::size_t n = f.size();
    Code top = 0;
    for (std::size_t i = 0; i < n; ++i) top += f[i] * power[i];

    std::vector<std::uint8_t> g(n, 0);
    while (true) {
        Code code = 0;
        for (std::size_t i = 0; i < n; ++i) code += g[i] * power[i];
        if (code != top && is_rdf[code]) return true;

        // Next g: standard order allows 0..f(i), PO allows {0, f(i)}.
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (g[i] == f[i]) {
                g[i] = 0;
                continue;
            }
            g[i] = order == MinimalityOrder::Standard ? static_cast<std::uint8_t>(g[i] + 1) : f[i];
            break;
        }
        if (i == n) return false;
    }
}

}  // namespace

BruteForceOracle::BruteForceOracle(const Graph& g, MinimalityOrder order, std::size_t cap) : order_(order) {
    const std::size_t n = g.order();
    if (n > cap || n > 19) throw OracleCapExceeded(n, std::min<std::size_t>(cap, 19));

    std::vector<Code> power(n);
    Code total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        power[i] = total;
        total *= 3;
    }
    examined_ = total;

    std::vector<bool> is_rdf(total);
    for (Code c = 0; c < total; ++c) is_rdf[c] = dominated_by_definition(g, decode(c, n));

    for (Code c = 0; c < total; ++c) {
        if (!is_rdf[c]) continue;
        auto f = decode(c, n);
        if (!has_rdf_below(f, power, is_rdf, order)) minimal_.emplace_back(std::move(f));
    }
    // Vertex 0 first, so this matches sorting by the text form.
    std::sort(minimal_.begin(), minimal_.end());
}

bool BruteForceOracle::extends(const Assignment& f, const VertexSet& forbidden) const {
    for (const auto& h : minimal_) {
        bool above = true;
        for (VertexId v = 0; v < f.size() && above; ++v) {
            above = order_ == MinimalityOrder::Standard ? f[v] <= h[v] : (f[v] == 0 || f[v] == h[v]);
            if (h[v] == 2 && forbidden.contains(v)) above = false;
        }
        if (above) return true;
    }
    return false;
}

std::vector<Assignment> brute_minimal_rdfs(const Graph& g, MinimalityOrder order, std::size_t cap) {
    return BruteForceOracle(g, order, cap).minimal();
}

bool brute_ext(const Graph& g, const Assignment& f, const VertexSet& forbidden, MinimalityOrder order, std::size_t cap) {
    return BruteForceOracle(g, order, cap).extends(f, forbidden);
}

}  // namespace romdom
