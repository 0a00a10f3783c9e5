#pragma once

#include <cstdint>
#include <optional>

#include "kiso/graph.hpp"

namespace kiso {

// a = floor(n/(k+1)) blocks, b = n - k*a path vertices.
struct ExtremalParams {
    int n = 0;
    int k = 0;
    int a = 0;
    int b = 0;
};

ExtremalParams extremal_params(int n, int k);

// P_n when n <= k; otherwise the path P_b on 0..b-1 with a K_k block fully
// joined to each of the path vertices 0..a-1. Blocks are labeled in order
// after the path: block i occupies b + i*k .. b + (i+1)*k - 1.
Graph build_extremal(int n, int k);

Graph build_path(int n);
Graph build_cycle(int n);
Graph build_complete(int n);

// Disjoint union; vertices of later parts are shifted past earlier ones.
Graph disjoint_union(const std::vector<Graph>& parts);

// Uniform random labeled spanning tree (decoded from a random Pruefer
// sequence) plus every non-tree pair independently with probability p.
// The stream is mt19937_64 consumed through portable integer arithmetic,
// so the same seed yields the same graph on every platform.
Graph gen_random_connected(int n, double p, std::uint64_t seed);

// Bit i of a mask selects the i-th pair (u,v), u < v, in lexicographic order.
int pair_count(int n);
Graph graph_from_mask(int n, std::uint64_t mask);

constexpr int kDefaultEnumerationCap = 8;

// Every connected labeled graph on n vertices exactly once, by increasing mask.
class ConnectedGraphCursor {
public:
    explicit ConnectedGraphCursor(int n, int cap = kDefaultEnumerationCap);

    std::optional<Graph> next();
    std::uint64_t mask() const { return last_mask_; }

private:
    int n_;
    std::uint64_t next_mask_ = 0;
    std::uint64_t end_mask_;
    std::uint64_t last_mask_ = 0;
};

// Connectivity of graph_from_mask(n, mask) without building the graph.
bool mask_is_connected(int n, std::uint64_t mask);

}  // namespace kiso
