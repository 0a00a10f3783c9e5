#pragma once

// Brute-force reference routines for tests. They read only a graph's edge
// list and work on plain adjacency matrices and subset bitmasks, so they
// share no code path with the library routines they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "kiso/graph.hpp"

namespace brute {

struct Matrix {
    int n = 0;
    std::vector<std::vector<bool>> adj;

    explicit Matrix(const kiso::Graph& g) : n(g.order()), adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false)) {
        for (auto [u, v] : g.edges()) {
            adj[u][v] = true;
            adj[v][u] = true;
        }
    }

    bool is_clique(std::uint32_t mask) const {
        for (int u = 0; u < n; ++u) {
            if (!((mask >> u) & 1U)) continue;
            for (int v = u + 1; v < n; ++v)
                if (((mask >> v) & 1U) && !adj[u][v]) return false;
        }
        return true;
    }

    std::uint32_t closed(std::uint32_t d) const {
        std::uint32_t out = d;
        for (int u = 0; u < n; ++u) {
            if (!((d >> u) & 1U)) continue;
            for (int v = 0; v < n; ++v)
                if (adj[u][v]) out |= 1U << v;
        }
        return out;
    }
};

inline int popcount(std::uint32_t x) { return __builtin_popcount(x); }

// Every k-subset of `allowed` that is a clique, as bitmasks.
inline std::vector<std::uint32_t> cliques(const Matrix& m, int k, std::uint32_t allowed) {
    std::vector<std::uint32_t> out;
    const std::uint32_t end = m.n == 32 ? 0 : (1U << m.n);
    for (std::uint32_t s = 0; s < end; ++s) {
        if ((s & ~allowed) || popcount(s) != k) continue;
        if (m.is_clique(s)) out.push_back(s);
    }
    return out;
}

inline std::uint32_t all(int n) { return n == 32 ? ~0U : (1U << n) - 1; }

inline bool has_clique(const Matrix& m, int k, std::uint32_t allowed) { return !cliques(m, k, allowed).empty(); }

// Sorted member lists of all k-cliques, lexicographically ordered.
inline std::vector<std::vector<int>> clique_lists(const kiso::Graph& g, int k) {
    const Matrix m(g);
    std::vector<std::vector<int>> out;
    for (std::uint32_t s : cliques(m, k, all(m.n))) {
        std::vector<int> members;
        for (int v = 0; v < m.n; ++v)
            if ((s >> v) & 1U) members.push_back(v);
        out.push_back(members);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool isolates(const Matrix& m, int k, std::uint32_t d) {
    return !has_clique(m, k, all(m.n) & ~m.closed(d));
}

// Minimum k-clique isolating set size over all 2^n subsets.
inline int iota(const kiso::Graph& g, int k) {
    const Matrix m(g);
    const auto all_cliques = cliques(m, k, all(m.n));
    int best = m.n;
    for (std::uint32_t d = 0;; ++d) {
        if (popcount(d) < best) {
            const std::uint32_t covered = m.closed(d);
            bool ok = true;
            for (std::uint32_t c : all_cliques)
                if (!(c & covered)) {
                    ok = false;
                    break;
                }
            if (ok) best = popcount(d);
        }
        if (d == all(m.n)) break;
    }
    return best;
}

inline int domination_number(const kiso::Graph& g) {
    const Matrix m(g);
    int best = m.n;
    for (std::uint32_t d = 0; d <= all(m.n); ++d) {
        if (popcount(d) < best && m.closed(d) == all(m.n)) best = popcount(d);
        if (d == all(m.n)) break;
    }
    return best;
}

inline bool isolates(const kiso::Graph& g, int k, const std::vector<int>& d) {
    const Matrix m(g);
    std::uint32_t mask = 0;
    for (int v : d) mask |= 1U << v;
    return isolates(m, k, mask);
}

// Labeled connected graphs on n vertices, counted with union-find over all edge masks.
inline std::uint64_t count_connected(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<int> parent(static_cast<std::size_t>(n));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int parts = n;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (!((mask >> i) & 1U)) continue;
            const int a = find(pairs[i].first), b = find(pairs[i].second);
            if (a != b) {
                parent[a] = b;
                --parts;
            }
        }
        if (parts == 1) ++count;
    }
    return count;
}

}  // namespace brute
