#pragma once

#include <optional>

#include "romdom/assignment.hpp"
#include "romdom/enum_stats.hpp"
#include "romdom/graph.hpp"

namespace romdom {

// The unique minimal rdf with V2(f) = v2: 2 on v2, 0 on N(v2) \ v2, 1 elsewhere. Empty when some
// v in v2 has P_{G,v2}(v) ⊆ {v}.
std::optional<Assignment> extend_from_v2(const Graph& g, const VertexSet& v2);

// All minimal rdfs, one per admissible V2 set, delivered in ascending order of V2 read as a bit
// pattern (bit i = vertex i). Candidate V2 sets are built by deciding vertices from the highest id
// down, dropping branches whose partial V2 already fails the privacy test or exceeds n/2 vertices.
EnumStats enumerate_minimal_rdf_simple(const Graph& g, const AssignmentSink& sink);

// All PO-minimal rdfs, in ascending order of V2 as above. Each include/exclude decision is kept
// only if gen_ext_po_rd still finds a PO-minimal completion.
EnumStats enumerate_po_minimal_simple(const Graph& g, const AssignmentSink& sink);

}  // namespace romdom
