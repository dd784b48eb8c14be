#include "romdom/grdf.hpp"

#include <stdexcept>

namespace romdom {

Grdf::Grdf(std::size_t n) : labels_(n, Label::Active) {
    for (auto& s : sets_) s = VertexSet(n);
    sets_[static_cast<std::size_t>(Label::Active)] = VertexSet::full(n);
}

Grdf Grdf::parse(std::string_view text) {
    Grdf f(text.size());
    for (VertexId v = 0; v < text.size(); ++v) {
        switch (text[v]) {
            case '0': f.set(v, Label::Zero); break;
            case '1': f.set(v, Label::One); break;
            case '2': f.set(v, Label::Two); break;
            case 'x': f.set(v, Label::NotOne); break;
            case 'y': f.set(v, Label::NotTwo); break;
            case '.': break;
            default: throw std::invalid_argument(std::string("invalid grdf character '") + text[v] + "'");
        }
    }
    return f;
}

char label_char(Label label) {
    switch (label) {
        case Label::Zero: return '0';
        case Label::One: return '1';
        case Label::Two: return '2';
        case Label::NotOne: return 'x';
        case Label::NotTwo: return 'y';
        case Label::Active: return '.';
    }
    return '?';
}

std::string Grdf::to_string() const {
    std::string s;
    s.reserve(labels_.size());
    for (auto l : labels_) s.push_back(label_char(l));
    return s;
}

void Grdf::set(VertexId v, Label label) {
    sets_[static_cast<std::size_t>(labels_[v])].erase(v);
    labels_[v] = label;
    sets_[static_cast<std::size_t>(label)].insert(v);
}

bool Grdf::is_complete() const {
    return members(Label::Active).empty() && members(Label::NotOne).empty() && members(Label::NotTwo).empty();
}

Assignment Grdf::to_assignment() const {
    Assignment f(labels_.size());
    for (VertexId v = 0; v < labels_.size(); ++v) {
        auto l = labels_[v];
        if (l != Label::Zero && l != Label::One && l != Label::Two)
            throw std::logic_error("grdf is not fully labeled");
        f.set(v, static_cast<std::uint8_t>(l));
    }
    return f;
}

bool is_consistent(const Assignment& g, const Grdf& f) {
    for (VertexId v = 0; v < f.size(); ++v) {
        const Label l = f[v];
        if (l == Label::Active) continue;
        switch (g[v]) {
            case 2:
                if (l != Label::Two && l != Label::NotOne) return false;
                break;
            case 1:
                if (l != Label::One && l != Label::NotTwo) return false;
                break;
            default:
                if (l != Label::Zero && l != Label::NotOne && l != Label::NotTwo) return false;
        }
    }
    return true;
}

}  // namespace romdom
