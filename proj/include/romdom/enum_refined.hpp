#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "romdom/enum_stats.hpp"
#include "romdom/graph.hpp"
#include "romdom/grdf.hpp"

namespace romdom {

// Mutable copy of a graph for the search. Edge deletions are logged so a branch can undo them.
class WorkingGraph {
public:
    explicit WorkingGraph(const Graph& g);

    std::size_t order() const { return adj_.size(); }
    const VertexSet& neighbors(VertexId v) const { return adj_[v]; }
    bool adjacent(VertexId u, VertexId v) const { return adj_[u].contains(v); }

    void remove_edge(VertexId u, VertexId v);

    std::size_t mark() const { return removed_.size(); }
    // Restores every edge removed since the mark.
    void rollback(std::size_t mark);

private:
    std::vector<VertexSet> adj_;
    std::vector<Edge> removed_;
};

enum class Rule { LastPotentialPrivateNeighbor, Zero, One, Two, NoPotentialDomination, NoPrivateNeighbor, Isolate, Edges };

std::string_view rule_name(Rule rule);

// One effect of a rule application: either a relabeling of `vertex` or, for Rule::Edges, the
// removal of the edge {vertex, other}.
struct ReductionStep {
    Rule rule;
    VertexId vertex;
    Label label = Label::Active;
    VertexId other = 0;
};

using ReductionTrace = std::vector<ReductionStep>;

// Applies the reduction rules until none fires. Each pass tries LPN, V0, V1, V2, NPD, NPN, Isolate
// and Edges in this order and restarts from LPN after any single application.
ReductionTrace apply_reductions(WorkingGraph& g, Grdf& f);

// Replays a trace on (g, f).
void replay(WorkingGraph& g, Grdf& f, const ReductionTrace& trace);

struct BranchChoice {
    VertexId vertex;
    // 1: active with at least two neighbors in A ∪ NotTwo; 2: any active vertex; 3: a NotOne vertex.
    int priority;
};

// Lowest-id vertex of the highest nonempty priority class. Among NotOne vertices those with a
// NotTwo-neighborhood of size other than 2 are preferred. Empty iff A ∪ NotOne is empty.
std::optional<BranchChoice> pick_branch_vertex(const WorkingGraph& g, const Grdf& f);

// v gets 2. Throws std::invalid_argument unless v is Active or NotOne.
Grdf branch_set_two(const Grdf& f, VertexId v);
// v gets NotTwo when Active, 0 when NotOne. Same precondition.
Grdf branch_deny_two(const Grdf& f, VertexId v);

inline constexpr double kDefaultNotOneWeight = 2.0 / 3.0;
inline constexpr double kDefaultNotTwoWeight = 0.38488;

// |A| + w1·|NotOne| + w2·|NotTwo|
double measure(const Grdf& f, double w1 = kDefaultNotOneWeight, double w2 = kDefaultNotTwoWeight);

// Index (1..4) of the first violated grdf invariant, or empty if all hold:
//   1. every 0- or NotOne-vertex has a 2-neighbor;
//   2. every neighbor of a 2-vertex is NotOne, 0 or 2;
//   3. every neighbor of a 1-vertex is NotTwo, 0 or 1;
//   4. NotTwo nonempty implies A ∪ NotOne nonempty.
std::optional<int> violated_invariant(const WorkingGraph& g, const Grdf& f);

// Phase 0 is the edge structure every reduced state has; phases 1-3 are the properties holding
// after the respective branching priority is exhausted. Phase k > 0 also checks phase 0.
bool check_phase_properties(const WorkingGraph& g, const Grdf& f, int phase);

struct RefinedOptions {
    // Check invariants, phase properties, measure decrease and leaf minimality at every node;
    // a violation throws std::logic_error.
    bool check_invariants = false;
    double not_one_weight = kDefaultNotOneWeight;
    double not_two_weight = kDefaultNotTwoWeight;
};

// Branch-and-reduce enumeration of all minimal rdfs. Starts from the nowhere-defined grdf, branches
// on "v gets 2" before "v does not get 2", reduces each child and only descends into children
// for which gen_ext_rd finds a consistent minimal rdf. No output is stored.
EnumStats enumerate_minimal_rdf_refined(const Graph& g, const AssignmentSink& sink, const RefinedOptions& options = {});

}  // namespace romdom
