#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace kiso {

// Subset of {0, ..., universe-1}, stored as a dense bitset.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr int kWordBits = 64;

    VertexSet() = default;
    explicit VertexSet(int universe);
    VertexSet(int universe, std::initializer_list<int> members);
    VertexSet(int universe, const std::vector<int>& members);

    static VertexSet full(int universe);

    int universe() const { return universe_; }
    int count() const;
    bool empty() const;

    bool contains(int v) const {
        return (words_[static_cast<std::size_t>(v) / kWordBits] >> (v % kWordBits)) & 1U;
    }
    void insert(int v) { words_[static_cast<std::size_t>(v) / kWordBits] |= Word{1} << (v % kWordBits); }
    void erase(int v) { words_[static_cast<std::size_t>(v) / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

    // Smallest member >= from, or -1.
    int next(int from) const;
    int first() const { return next(0); }

    std::vector<int> members() const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits) {
                fn(static_cast<int>(w * kWordBits + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    bool intersects(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;
    int intersection_count(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    VertexSet complement() const;

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    const std::vector<Word>& words() const { return words_; }

private:
    void trim();

    int universe_ = 0;
    std::vector<Word> words_;
};

}  // namespace kiso
