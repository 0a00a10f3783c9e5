#include "kiso/vertex_set.hpp"

#include <stdexcept>
#include <string>

namespace kiso {

namespace {

std::size_t words_for(int universe) {
    return (static_cast<std::size_t>(universe) + VertexSet::kWordBits - 1) / VertexSet::kWordBits;
}

}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe), words_(words_for(universe), 0) {
    if (universe < 0) throw std::invalid_argument("negative vertex-set universe");
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members)
    : VertexSet(universe, std::vector<int>(members)) {}

VertexSet::VertexSet(int universe, const std::vector<int>& members) : VertexSet(universe) {
    for (int v : members) {
        if (v < 0 || v >= universe)
            throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." +
                                    std::to_string(universe - 1));
        insert(v);
    }
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
}

void VertexSet::trim() {
    const int tail = universe_ % kWordBits;
    if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
}

int VertexSet::count() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const {
    for (Word w : words_)
        if (w) return false;
    return true;
}

int VertexSet::next(int from) const {
    if (from >= universe_) return -1;
    if (from < 0) from = 0;
    std::size_t w = static_cast<std::size_t>(from) / kWordBits;
    Word bits = words_[w] & (~Word{0} << (from % kWordBits));
    while (true) {
        if (bits) return static_cast<int>(w * kWordBits + std::countr_zero(bits));
        if (++w == words_.size()) return -1;
        bits = words_[w];
    }
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
}

bool VertexSet::intersects(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

int VertexSet::intersection_count(const VertexSet& other) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
    return c;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

VertexSet VertexSet::complement() const {
    VertexSet out(*this);
    for (auto& w : out.words_) w = ~w;
    out.trim();
    return out;
}

}  // namespace kiso
