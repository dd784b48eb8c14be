#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "romdom/assignment.hpp"
#include "romdom/vertex_set.hpp"

namespace romdom {

// Labels of a generalized Roman domination function. NotOne is "will be 0 or 2", NotTwo is
// "will be 0 or 1", Active is undecided.
enum class Label : std::uint8_t { Zero = 0, One = 1, Two = 2, NotOne = 3, NotTwo = 4, Active = 5 };

inline constexpr std::size_t kLabelCount = 6;

// Partial five-valued labeling with per-label member sets kept in sync.
//
// Text form, one character per vertex: '0' '1' '2', 'x' for NotOne, 'y' for NotTwo, '.' for Active.
class Grdf {
public:
    Grdf() = default;
    // Nowhere-defined labeling: every vertex active.
    explicit Grdf(std::size_t n);

    static Grdf parse(std::string_view text);
    std::string to_string() const;

    std::size_t size() const { return labels_.size(); }
    Label operator[](VertexId v) const { return labels_[v]; }
    void set(VertexId v, Label label);

    const VertexSet& members(Label label) const { return sets_[static_cast<std::size_t>(label)]; }
    std::size_t count(Label label) const { return members(label).size(); }

    // Every vertex labeled 0, 1 or 2.
    bool is_complete() const;
    // Only meaningful when is_complete().
    Assignment to_assignment() const;

    bool operator==(const Grdf& o) const { return labels_ == o.labels_; }

private:
    std::vector<Label> labels_;
    std::array<VertexSet, kLabelCount> sets_;
};

char label_char(Label label);

// An rdf g is consistent with f when g(v)=2 ⇒ f(v) ∈ {Active, 2, NotOne}, g(v)=1 ⇒ f(v) ∈ {Active, 1,
// NotTwo} and g(v)=0 ⇒ f(v) ∈ {Active, 0, NotOne, NotTwo}.
bool is_consistent(const Assignment& g, const Grdf& f);

}  // namespace romdom
