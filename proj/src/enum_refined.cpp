#include "romdom/enum_refined.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "romdom/extension.hpp"

namespace romdom {

WorkingGraph::WorkingGraph(const Graph& g) {
    adj_.reserve(g.order());
    for (VertexId v = 0; v < g.order(); ++v) adj_.push_back(g.open_neighborhood(v));
}

void WorkingGraph::remove_edge(VertexId u, VertexId v) {
    adj_[u].erase(v);
    adj_[v].erase(u);
    removed_.emplace_back(u, v);
}

void WorkingGraph::rollback(std::size_t mark) {
    while (removed_.size() > mark) {
        auto [u, v] = removed_.back();
        adj_[u].insert(v);
        adj_[v].insert(u);
        removed_.pop_back();
    }
}

std::string_view rule_name(Rule rule) {
    switch (rule) {
        case Rule::LastPotentialPrivateNeighbor: return "LPN";
        case Rule::Zero: return "V0";
        case Rule::One: return "V1";
        case Rule::Two: return "V2";
        case Rule::NoPotentialDomination: return "NPD";
        case Rule::NoPrivateNeighbor: return "NPN";
        case Rule::Isolate: return "Isolate";
        case Rule::Edges: return "Edges";
    }
    return "?";
}

namespace {

class Reducer {
public:
    Reducer(WorkingGraph& g, Grdf& f, ReductionTrace& trace) : g_(g), f_(f), trace_(trace) {}

    bool fire_once() {
        return last_potential_private_neighbor() || rule_zero() || rule_one() || rule_two() ||
               no_potential_domination() || no_private_neighbor() || isolate() || edges();
    }

private:
    const VertexSet& of(Label l) const { return f_.members(l); }

    void relabel(Rule rule, VertexId v, Label label) {
        f_.set(v, label);
        trace_.push_back({rule, v, label, 0});
    }

    bool last_potential_private_neighbor() {
        const VertexSet candidates = of(Label::NotTwo) | of(Label::Active);
        for (VertexId v : of(Label::Two)) {
            const VertexSet left = g_.neighbors(v) & candidates;
            if (left.size() == 1) {
                relabel(Rule::LastPotentialPrivateNeighbor, left.first(), Label::Zero);
                return true;
            }
        }
        return false;
    }

    // Relabels Active neighbors of v to `active_to` and NotOne neighbors to 0.
    bool push_neighbors(Rule rule, VertexId v, Label active_to, Label other_from) {
        const VertexSet active = g_.neighbors(v) & of(Label::Active);
        const VertexSet other = g_.neighbors(v) & of(other_from);
        if (active.empty() && other.empty()) return false;
        for (VertexId w : active) relabel(rule, w, active_to);
        for (VertexId w : other) relabel(rule, w, Label::Zero);
        return true;
    }

    bool rule_zero() {
        const VertexSet& twos = of(Label::Two);
        const VertexSet watched = of(Label::Zero) | of(Label::NotOne) | of(Label::NotTwo);
        for (VertexId v : of(Label::Zero)) {
            const VertexSet dominators = g_.neighbors(v) & twos;
            if (dominators.size() != 1) continue;
            const VertexId u = dominators.first();
            bool others_doubly_dominated = true;
            for (VertexId x : g_.neighbors(u) & watched) {
                if (x != v && (g_.neighbors(x) & twos).size() < 2) {
                    others_doubly_dominated = false;
                    break;
                }
            }
            if (others_doubly_dominated && push_neighbors(Rule::Zero, v, Label::NotTwo, Label::NotOne)) return true;
        }
        return false;
    }

    bool rule_one() {
        for (VertexId v : of(Label::One))
            if (push_neighbors(Rule::One, v, Label::NotTwo, Label::NotOne)) return true;
        return false;
    }

    bool rule_two() {
        for (VertexId v : of(Label::Two))
            if (push_neighbors(Rule::Two, v, Label::NotOne, Label::NotTwo)) return true;
        return false;
    }

    bool no_potential_domination() {
        const VertexSet allowed = of(Label::NotTwo) | of(Label::Zero) | of(Label::One);
        for (VertexId v : of(Label::NotTwo)) {
            if (g_.neighbors(v).is_subset_of(allowed)) {
                relabel(Rule::NoPotentialDomination, v, Label::One);
                return true;
            }
        }
        return false;
    }

    bool no_private_neighbor() {
        const VertexSet allowed = of(Label::Zero) | of(Label::NotOne);
        for (VertexId v : of(Label::Active)) {
            if (g_.neighbors(v).is_subset_of(allowed)) {
                relabel(Rule::NoPrivateNeighbor, v, Label::NotTwo);
                return true;
            }
        }
        return false;
    }

    bool isolate() {
        if (!of(Label::Active).empty()) return false;
        for (VertexId v : of(Label::NotOne)) {
            if (!g_.neighbors(v).intersects(of(Label::NotTwo))) {
                relabel(Rule::Isolate, v, Label::Zero);
                return true;
            }
        }
        return false;
    }

    bool edges() {
        const VertexSet passive = of(Label::NotTwo) | of(Label::Zero) | of(Label::One);
        for (VertexId u : passive) {
            const VertexSet inner = g_.neighbors(u) & passive;
            if (!inner.empty()) {
                const VertexId v = inner.first();
                g_.remove_edge(u, v);
                trace_.push_back({Rule::Edges, u, Label::Active, v});
                return true;
            }
        }
        return false;
    }

    WorkingGraph& g_;
    Grdf& f_;
    ReductionTrace& trace_;
};

void require_branchable(const Grdf& f, VertexId v) {
    if (v >= f.size() || (f[v] != Label::Active && f[v] != Label::NotOne))
        throw std::invalid_argument("vertex " + std::to_string(v) + " is neither active nor NotOne");
}

}  // namespace

ReductionTrace apply_reductions(WorkingGraph& g, Grdf& f) {
    ReductionTrace trace;
    Reducer reducer(g, f, trace);
    while (reducer.fire_once()) {
    }
    return trace;
}

void replay(WorkingGraph& g, Grdf& f, const ReductionTrace& trace) {
    for (const auto& step : trace) {
        if (step.rule == Rule::Edges) {
            g.remove_edge(step.vertex, step.other);
        } else {
            f.set(step.vertex, step.label);
        }
    }
}

std::optional<BranchChoice> pick_branch_vertex(const WorkingGraph& g, const Grdf& f) {
    const VertexSet& active = f.members(Label::Active);
    const VertexSet open = active | f.members(Label::NotTwo);
    for (VertexId v : active)
        if ((g.neighbors(v) & open).size() >= 2) return BranchChoice{v, 1};
    if (!active.empty()) return BranchChoice{active.first(), 2};

    const VertexSet& not_one = f.members(Label::NotOne);
    for (VertexId v : not_one)
        if ((g.neighbors(v) & f.members(Label::NotTwo)).size() != 2) return BranchChoice{v, 3};
    if (!not_one.empty()) return BranchChoice{not_one.first(), 3};
    return std::nullopt;
}

Grdf branch_set_two(const Grdf& f, VertexId v) {
    require_branchable(f, v);
    Grdf child = f;
    child.set(v, Label::Two);
    return child;
}

Grdf branch_deny_two(const Grdf& f, VertexId v) {
    require_branchable(f, v);
    Grdf child = f;
    child.set(v, f[v] == Label::Active ? Label::NotTwo : Label::Zero);
    return child;
}

double measure(const Grdf& f, double w1, double w2) {
    return static_cast<double>(f.count(Label::Active)) + w1 * static_cast<double>(f.count(Label::NotOne)) +
           w2 * static_cast<double>(f.count(Label::NotTwo));
}

std::optional<int> violated_invariant(const WorkingGraph& g, const Grdf& f) {
    const VertexSet& twos = f.members(Label::Two);
    for (VertexId x : f.members(Label::NotOne) | f.members(Label::Zero))
        if (!g.neighbors(x).intersects(twos)) return 1;

    const VertexSet around_two = f.members(Label::NotOne) | f.members(Label::Zero) | twos;
    for (VertexId x : twos)
        if (!g.neighbors(x).is_subset_of(around_two)) return 2;

    const VertexSet around_one = f.members(Label::NotTwo) | f.members(Label::Zero) | f.members(Label::One);
    for (VertexId x : f.members(Label::One))
        if (!g.neighbors(x).is_subset_of(around_one)) return 3;

    if (!f.members(Label::NotTwo).empty() && f.members(Label::Active).empty() && f.members(Label::NotOne).empty())
        return 4;
    return std::nullopt;
}

bool check_phase_properties(const WorkingGraph& g, const Grdf& f, int phase) {
    const VertexSet& active = f.members(Label::Active);
    const VertexSet& not_one = f.members(Label::NotOne);
    const VertexSet& not_two = f.members(Label::NotTwo);

    const VertexSet passive = f.members(Label::Zero) | f.members(Label::One) | not_two;
    for (VertexId u : passive)
        if (g.neighbors(u).intersects(passive)) return false;
    for (VertexId u : f.members(Label::Two))
        if (g.neighbors(u).intersects(not_two | active)) return false;
    for (VertexId u : f.members(Label::One))
        if (g.neighbors(u).intersects(not_one | active)) return false;

    const VertexSet zero_or_not_one = f.members(Label::Zero) | not_one;
    switch (phase) {
        case 0: return true;
        case 1:
            for (VertexId v : active) {
                for (VertexId u : g.neighbors(v) & active) {
                    VertexSet rest = g.neighbors(v);
                    rest.erase(u);
                    if (!rest.is_subset_of(zero_or_not_one)) return false;
                }
            }
            return true;
        case 2:
            if (!active.empty()) return false;
            for (VertexId x : not_two) {
                const VertexSet& nb = g.neighbors(x);
                if (nb.empty() || !nb.is_subset_of(not_one)) return false;
            }
            return true;
        case 3: return active.empty() && not_one.empty() && not_two.empty();
        default: throw std::invalid_argument("phase must be in 0..3");
    }
}

namespace {

class RefinedSearch {
public:
    RefinedSearch(const Graph& g, const AssignmentSink& sink, const RefinedOptions& options)
        : g_(g), work_(g), sink_(sink), options_(options) {}

    EnumStats run() {
        const auto start = std::chrono::steady_clock::now();
        Grdf root(g_.order());
        visit(root, 1);
        stats_.max_gap = meter_.finish();
        stats_.tree_size_ratio = static_cast<double>(stats_.tree_nodes) / std::pow(1.9332, g_.order());
        stats_.wall_ms = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                        std::chrono::steady_clock::now() - start)
                                                        .count());
        return stats_;
    }

private:
    void fail(const std::string& what, const Grdf& f) const {
        throw std::logic_error(what + " at grdf " + f.to_string());
    }

    void visit(const Grdf& f, int parent_priority) {
        ++stats_.tree_nodes;
        if (f.is_complete()) {
            const Assignment out = f.to_assignment();
            if (options_.check_invariants) {
                if (!check_phase_properties(work_, f, 3)) fail("phase 3 properties violated", f);
                if (!is_minimal_rdf(g_, out)) fail("leaf is not a minimal rdf", f);
            }
            meter_.output();
            ++stats_.solutions;
            sink_(out);
            return;
        }
        meter_.inner_event();

        const auto choice = pick_branch_vertex(work_, f);
        if (!choice) fail("no branching vertex in an incomplete grdf", f);
        if (choice->priority > parent_priority) ++stats_.phase_transitions;
        ++stats_.branchings_by_priority[static_cast<std::size_t>(choice->priority - 1)];
        if (options_.check_invariants) {
            if (choice->priority < parent_priority) fail("branching priority increased", f);
            if (!check_phase_properties(work_, f, choice->priority - 1)) fail("phase properties violated", f);
        }

        explore(f, branch_set_two(f, choice->vertex), choice->priority);
        explore(f, branch_deny_two(f, choice->vertex), choice->priority);
        meter_.inner_event();
    }

    void explore(const Grdf& parent, Grdf child, int priority) {
        const auto mark = work_.mark();
        apply_reductions(work_, child);
        if (options_.check_invariants) {
            if (auto bad = violated_invariant(work_, child)) fail("grdf invariant " + std::to_string(*bad) + " violated", child);
            if (!check_phase_properties(work_, child, 0)) fail("reduced edge structure violated", child);
            const double before = measure(parent, options_.not_one_weight, options_.not_two_weight);
            const double after = measure(child, options_.not_one_weight, options_.not_two_weight);
            if (!(after < before - 1e-12)) fail("measure did not decrease", child);
        }
        if (gen_ext_rd(project_grdf(g_, child))) visit(child, priority);
        work_.rollback(mark);
    }

    const Graph& g_;
    WorkingGraph work_;
    const AssignmentSink& sink_;
    RefinedOptions options_;
    DelayMeter meter_;
    EnumStats stats_;
};

}  // namespace

EnumStats enumerate_minimal_rdf_refined(const Graph& g, const AssignmentSink& sink, const RefinedOptions& options) {
    return RefinedSearch(g, sink, options).run();
}

}  // namespace romdom
