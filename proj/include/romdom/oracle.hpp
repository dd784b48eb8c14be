#pragma once

#include <stdexcept>
#include <vector>

#include "romdom/assignment.hpp"
#include "romdom/graph.hpp"

namespace romdom {

enum class MinimalityOrder { Standard, Po };

inline constexpr std::size_t kDefaultOracleCap = 12;

class OracleCapExceeded : public std::runtime_error {
public:
    OracleCapExceeded(std::size_t order, std::size_t cap)
        : std::runtime_error("brute force refused: order " + std::to_string(order) + " exceeds cap " +
                             std::to_string(cap)) {}
};

// Ground truth straight from the definitions: sweeps all 3^n functions, keeps the rdfs, and keeps an
// rdf f iff no other rdf g satisfies g ≤ f (resp. g ≤_PO f). Uses none of the structural
// characterizations.
class BruteForceOracle {
public:
    BruteForceOracle(const Graph& g, MinimalityOrder order, std::size_t cap = kDefaultOracleCap);

    // Sorted by assignment string.
    const std::vector<Assignment>& minimal() const { return minimal_; }
    std::size_t assignments_examined() const { return examined_; }

    // Is there a listed f~ above f (≤ resp. ≤_PO) with V2(f~) ∩ forbidden = ∅?
    bool extends(const Assignment& f, const VertexSet& forbidden) const;

private:
    MinimalityOrder order_;
    std::vector<Assignment> minimal_;
    std::size_t examined_ = 0;
};

std::vector<Assignment> brute_minimal_rdfs(const Graph& g, MinimalityOrder order, std::size_t cap = kDefaultOracleCap);

bool brute_ext(const Graph& g, const Assignment& f, const VertexSet& forbidden, MinimalityOrder order,
               std::size_t cap = kDefaultOracleCap);

}  // namespace romdom
