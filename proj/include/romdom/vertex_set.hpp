#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace romdom {

using VertexId = std::uint32_t;

// Dense bitset over [0, capacity). Iteration is always in ascending id order.
class VertexSet {
public:
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = VertexId;
        using difference_type = std::ptrdiff_t;
        using pointer = const VertexId*;
        using reference = VertexId;

        const_iterator() = default;
        const_iterator(const VertexSet* set, std::size_t pos) : set_(set), pos_(pos) { advance_to_member(); }

        VertexId operator*() const { return static_cast<VertexId>(pos_); }
        const_iterator& operator++() {
            ++pos_;
            advance_to_member();
            return *this;
        }
        const_iterator operator++(int) {
            auto tmp = *this;
            ++*this;
            return tmp;
        }
        bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }

    private:
        void advance_to_member();

        const VertexSet* set_ = nullptr;
        std::size_t pos_ = 0;
    };

    VertexSet() = default;
    explicit VertexSet(std::size_t capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}
    VertexSet(std::size_t capacity, std::initializer_list<VertexId> members) : VertexSet(capacity) {
        for (auto v : members) insert(v);
    }

    static VertexSet full(std::size_t capacity);

    std::size_t capacity() const { return capacity_; }

    bool contains(VertexId v) const { return v < capacity_ && (words_[v >> 6] >> (v & 63)) & 1U; }
    void insert(VertexId v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(VertexId v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    void clear();

    std::size_t size() const;
    bool empty() const;

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator-=(const VertexSet& o);

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    bool operator==(const VertexSet& o) const = default;

    bool is_subset_of(const VertexSet& o) const;
    bool intersects(const VertexSet& o) const;
    // Lowest member, or capacity() when empty.
    VertexId first() const;

    const_iterator begin() const { return const_iterator(this, 0); }
    const_iterator end() const { return const_iterator(this, capacity_); }

    std::vector<VertexId> to_vector() const { return {begin(), end()}; }

private:
    friend class const_iterator;

    std::size_t capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

inline void VertexSet::const_iterator::advance_to_member() {
    const std::size_t cap = set_->capacity_;
    while (pos_ < cap) {
        std::uint64_t word = set_->words_[pos_ >> 6] >> (pos_ & 63);
        if (word != 0) {
            pos_ += static_cast<std::size_t>(std::countr_zero(word));
            if (pos_ > cap) pos_ = cap;
            return;
        }
        pos_ = (pos_ | 63) + 1;
    }
    pos_ = cap;
}

}  // namespace romdom
