#pragma once

#include <functional>
#include <optional>

#include "romdom/assignment.hpp"
#include "romdom/graph.hpp"
#include "romdom/grdf.hpp"

namespace romdom {

// (G, f, forbidden) for the generalized extension problems. The graph is borrowed and must outlive
// the instance.
class ExtensionInstance {
public:
    // Throws std::invalid_argument if f has the wrong length or V2(f) meets the forbidden set.
    ExtensionInstance(const Graph& g, Assignment f, VertexSet forbidden);

    const Graph& graph() const { return *graph_; }
    const Assignment& assignment() const { return f_; }
    const VertexSet& forbidden() const { return forbidden_; }

private:
    const Graph* graph_;
    Assignment f_;
    VertexSet forbidden_;
};

// Is there a minimal rdf f~ with f ≤ f~? Returns such an f~ when there is.
//
// Repeatedly raises 1-valued neighbors of 2-valued vertices to 2 (lowest id first), answers no if
// some 2-vertex v has N(v) ⊆ N[V2 \ {v}], and finally sets every vertex outside N[V2] to 1.
// Runs in O(n·Δ²).
std::optional<Assignment> ext_rd(const Graph& g, const Assignment& f);

// As ext_rd, additionally requiring V2(f~) ∩ forbidden = ∅. Raising a forbidden vertex to 2 is a
// no-answer.
std::optional<Assignment> gen_ext_rd(const ExtensionInstance& inst);

// Is there a PO-minimal rdf f~ with f ≤_PO f~ (1s stay 1, 2s stay 2)? Since a 1 next to a 2 can
// neither stay nor be raised, that is a no-answer; the privacy test uses closed neighborhoods,
// N[v] ⊆ N[V2 \ {v}].
std::optional<Assignment> ext_po_rd(const Graph& g, const Assignment& f);
// No vertex is ever raised to 2 here, so the forbidden set only constrains the input.
std::optional<Assignment> gen_ext_po_rd(const ExtensionInstance& inst);

// The {0,1,2}-function derived from a grdf: Active, 0, NotOne and NotTwo map to 0, 1 to 1, 2 to 2.
// The forbidden set is the NotTwo vertices.
ExtensionInstance project_grdf(const Graph& g, const Grdf& f);

}  // namespace romdom
