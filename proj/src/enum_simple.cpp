#include "romdom/enum_simple.hpp"

#include <chrono>
#include <cmath>

#include "romdom/extension.hpp"

namespace romdom {

std::optional<Assignment> extend_from_v2(const Graph& g, const VertexSet& v2) {
    for (VertexId v : v2) {
        auto priv = private_neighbors(g, v2, v);
        priv.erase(v);
        if (priv.empty()) return std::nullopt;
    }
    const VertexSet dominated = closed_neighborhood(g, v2);
    Assignment f(g.order(), 1);
    for (VertexId v : dominated) f.set(v, v2.contains(v) ? 2 : 0);
    return f;
}

namespace {

enum class Order { Standard, Po };

class SubsetWalk {
public:
    SubsetWalk(const Graph& g, const AssignmentSink& sink, Order order)
        : g_(g), sink_(sink), order_(order), include_(g.order()), exclude_(g.order()) {}

    EnumStats run() {
        const auto start = std::chrono::steady_clock::now();
        visit(g_.order());
        stats_.max_gap = meter_.finish();
        stats_.tree_size_ratio = static_cast<double>(stats_.tree_nodes) / std::pow(1.9332, g_.order());
        stats_.wall_ms = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                        std::chrono::steady_clock::now() - start)
                                                        .count());
        return stats_;
    }

private:
    // Vertices >= undecided are decided; vertex undecided-1 is next.
    void visit(std::size_t undecided) {
        ++stats_.tree_nodes;
        if (undecided == 0) {
            emit();
            return;
        }
        meter_.inner_event();
        const auto v = static_cast<VertexId>(undecided - 1);

        exclude_.insert(v);
        if (viable()) visit(undecided - 1);
        exclude_.erase(v);

        if (order_ == Order::Po || 2 * (include_.size() + 1) <= g_.order()) {
            include_.insert(v);
            if (viable()) visit(undecided - 1);
            include_.erase(v);
        }
        meter_.inner_event();
    }

    ExtensionInstance instance() const {
        Assignment f(g_.order());
        for (VertexId v : include_) f.set(v, 2);
        return ExtensionInstance(g_, std::move(f), exclude_);
    }

    bool viable() const {
        auto inst = instance();
        return order_ == Order::Standard ? gen_ext_rd(inst).has_value() : gen_ext_po_rd(inst).has_value();
    }

    void emit() {
        std::optional<Assignment> f;
        if (order_ == Order::Standard) {
            f = extend_from_v2(g_, include_);
        } else {
            f = gen_ext_po_rd(instance());
        }
        meter_.output();
        ++stats_.solutions;
        sink_(*f);
    }

    const Graph& g_;
    const AssignmentSink& sink_;
    Order order_;
    VertexSet include_;
    VertexSet exclude_;
    DelayMeter meter_;
    EnumStats stats_;
};

}  // namespace

EnumStats enumerate_minimal_rdf_simple(const Graph& g, const AssignmentSink& sink) {
    return SubsetWalk(g, sink, Order::Standard).run();
}

EnumStats enumerate_po_minimal_simple(const Graph& g, const AssignmentSink& sink) {
    return SubsetWalk(g, sink, Order::Po).run();
}

}  // namespace romdom
