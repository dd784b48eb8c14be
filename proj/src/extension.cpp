#include "romdom/extension.hpp"

#include <algorithm>
#include <stdexcept>

namespace romdom {

ExtensionInstance::ExtensionInstance(const Graph& g, Assignment f, VertexSet forbidden)
    : graph_(&g), f_(std::move(f)), forbidden_(std::move(forbidden)) {
    if (f_.size() != g.order()) throw std::invalid_argument("assignment length differs from graph order");
    if (forbidden_.capacity() != g.order()) throw std::invalid_argument("forbidden set has wrong capacity");
    for (VertexId v : forbidden_)
        if (f_[v] == 2)
            throw std::invalid_argument("forbidden vertex " + std::to_string(v) + " is already valued 2");
}

namespace {

enum class Order { Standard, Po };

// Is u ∈ N[twos \ {skip}]?
bool dominated_without(const Graph& g, const std::vector<std::uint8_t>& value, VertexId u, VertexId skip) {
    if (u != skip && value[u] == 2) return true;
    auto nb = g.neighbors(u);
    return std::any_of(nb.begin(), nb.end(), [&](VertexId w) { return w != skip && value[w] == 2; });
}

std::optional<Assignment> solve(const Graph& g, const Assignment& f, const VertexSet* forbidden, Order order) {
    const auto n = g.order();
    if (f.size() != n) throw std::invalid_argument("assignment length differs from graph order");
    std::vector<std::uint8_t> value = f.values();

    std::vector<VertexId> twos;
    for (VertexId v = 0; v < n; ++v)
        if (value[v] == 2) twos.push_back(v);

    if (order == Order::Standard) {
        // Saturation: no 1 may stay next to a 2. Pending vertices are processed lowest id first.
        VertexSet pending(n);
        for (VertexId v : twos) pending.insert(v);
        while (!pending.empty()) {
            const VertexId v = pending.first();
            for (VertexId u : g.neighbors(v)) {
                if (value[u] != 1) continue;
                if (forbidden != nullptr && forbidden->contains(u)) return std::nullopt;
                value[u] = 2;
                pending.insert(u);
                twos.push_back(u);
            }
            pending.erase(v);
        }
    } else {
        for (VertexId v : twos)
            for (VertexId u : g.neighbors(v))
                if (value[u] == 1) return std::nullopt;
    }

    for (VertexId v : twos) {
        auto nb = g.neighbors(v);
        bool covered = std::all_of(nb.begin(), nb.end(), [&](VertexId u) { return dominated_without(g, value, u, v); });
        if (order == Order::Po) covered = covered && dominated_without(g, value, v, v);
        if (covered) return std::nullopt;
    }

    for (VertexId v = 0; v < n; ++v)
        if (!dominated_without(g, value, v, static_cast<VertexId>(n))) value[v] = 1;
    return Assignment(std::move(value));
}

}  // namespace

std::optional<Assignment> ext_rd(const Graph& g, const Assignment& f) { return solve(g, f, nullptr, Order::Standard); }

std::optional<Assignment> gen_ext_rd(const ExtensionInstance& inst) {
    return solve(inst.graph(), inst.assignment(), &inst.forbidden(), Order::Standard);
}

std::optional<Assignment> ext_po_rd(const Graph& g, const Assignment& f) { return solve(g, f, nullptr, Order::Po); }

std::optional<Assignment> gen_ext_po_rd(const ExtensionInstance& inst) {
    return solve(inst.graph(), inst.assignment(), &inst.forbidden(), Order::Po);
}

ExtensionInstance project_grdf(const Graph& g, const Grdf& f) {
    Assignment hat(f.size());
    for (VertexId v : f.members(Label::One)) hat.set(v, 1);
    for (VertexId v : f.members(Label::Two)) hat.set(v, 2);
    return ExtensionInstance(g, std::move(hat), f.members(Label::NotTwo));
}

}  // namespace romdom
