#include "romdom/vertex_set.hpp"

#include <algorithm>
#include <cassert>

namespace romdom {

VertexSet VertexSet::full(std::size_t capacity) {
    VertexSet s(capacity);
    std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
    if (capacity % 64 != 0) s.words_.back() = (std::uint64_t{1} << (capacity % 64)) - 1;
    return s;
}

void VertexSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

std::size_t VertexSet::size() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool VertexSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    assert(capacity_ == o.capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    assert(capacity_ == o.capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
    assert(capacity_ == o.capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
    assert(capacity_ == o.capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
    assert(capacity_ == o.capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
}

VertexId VertexSet::first() const { return *begin(); }

}  // namespace romdom
