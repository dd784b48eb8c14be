#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>

#include "romdom/assignment.hpp"

namespace romdom {

using AssignmentSink = std::function<void(const Assignment&)>;

struct EnumStats {
    std::uint64_t solutions = 0;
    // Search nodes entered, leaves included.
    std::uint64_t tree_nodes = 0;
    // Largest number of inner-node entries plus exits between two consecutive outputs, also
    // counting the stretch before the first and after the last output.
    std::uint64_t max_gap = 0;
    std::uint64_t wall_ms = 0;
    // tree_nodes / 1.9332^n.
    double tree_size_ratio = 0.0;
    // Branching nodes by priority class (refined search only).
    std::array<std::uint64_t, 3> branchings_by_priority{};
    // Parent-to-child steps where the branching priority class dropped (refined search only).
    std::uint64_t phase_transitions = 0;
};

// Counts search-tree events between outputs.
class DelayMeter {
public:
    void inner_event() { ++since_output_; }
    void output() {
        max_gap_ = std::max(max_gap_, since_output_);
        since_output_ = 0;
    }
    std::uint64_t finish() {
        max_gap_ = std::max(max_gap_, since_output_);
        return max_gap_;
    }

private:
    std::uint64_t since_output_ = 0;
    std::uint64_t max_gap_ = 0;
};

}  // namespace romdom
