#include "kiso/generators.hpp"

#include <random>
#include <set>

namespace kiso {

namespace {

// Uniform draw from [0, bound) by rejection; independent of the standard
// library's distribution implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % bound;
}

double unit_interval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

ExtremalParams extremal_params(int n, int k) {
    if (n < 1 || k < 1) throw InputError("extremal family needs n >= 1 and k >= 1");
    ExtremalParams p;
    p.n = n;
    p.k = k;
    p.a = n / (k + 1);
    p.b = n - k * p.a;
    return p;
}

Graph build_extremal(int n, int k) {
    const ExtremalParams p = extremal_params(n, k);
    if (n <= k) return build_path(n);
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < p.b; ++i) edges.emplace_back(i, i + 1);
    for (int block = 0; block < p.a; ++block) {
        const int base = p.b + block * k;
        for (int u = base; u < base + k; ++u) {
            edges.emplace_back(block, u);
            for (int w = u + 1; w < base + k; ++w) edges.emplace_back(u, w);
        }
    }
    return Graph(n, edges);
}

Graph build_path(int n) {
    if (n < 1) throw InputError("path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph build_cycle(int n) {
    if (n < 3) throw InputError("cycle needs n >= 3, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, edges);
}

Graph build_complete(int n) {
    if (n < 1) throw InputError("complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    int total = 0;
    std::vector<Edge> edges;
    for (const Graph& part : parts) {
        for (auto [u, v] : part.edges()) edges.emplace_back(u + total, v + total);
        total += part.order();
    }
    return Graph(total, edges);
}

Graph gen_random_connected(int n, double p, std::uint64_t seed) {
    if (n < 1) throw InputError("random graph needs n >= 1");
    if (!(p > 0.0 && p <= 1.0)) throw InputError("edge probability must lie in (0, 1]");
    std::mt19937_64 rng(seed);

    std::vector<Edge> edges;
    if (n == 2) edges.emplace_back(0, 1);
    if (n > 2) {
        std::vector<int> prufer(static_cast<std::size_t>(n - 2));
        for (int& x : prufer) x = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));

        std::vector<int> degree(static_cast<std::size_t>(n), 1);
        for (int x : prufer) ++degree[static_cast<std::size_t>(x)];
        std::set<int> leaves;
        for (int v = 0; v < n; ++v)
            if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
        for (int x : prufer) {
            const int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
            if (--degree[static_cast<std::size_t>(x)] == 1) leaves.insert(x);
        }
        const int u = *leaves.begin();
        const int v = *std::next(leaves.begin());
        edges.emplace_back(u, v);
    }

    const Graph tree(n, edges);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!tree.has_edge(u, v) && unit_interval(rng) < p) edges.emplace_back(u, v);
    return Graph(n, edges);
}

int pair_count(int n) { return n * (n - 1) / 2; }

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1U) edges.emplace_back(u, v);
    return Graph(n, edges);
}

bool mask_is_connected(int n, std::uint64_t mask) {
    if (n < 1) return false;
    std::uint32_t adj[16] = {};
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1U) {
                adj[u] |= 1U << v;
                adj[v] |= 1U << u;
            }
    std::uint32_t seen = 1;
    std::uint32_t frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if ((frontier >> v) & 1U) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (n == 32 ? ~0U : (1U << n) - 1);
}

ConnectedGraphCursor::ConnectedGraphCursor(int n, int cap) : n_(n) {
    if (n < 1) throw InputError("enumeration needs n >= 1");
    if (cap > 11) throw InputError("enumeration cap cannot exceed 11 (pair mask must fit 64 bits)");
    if (n > cap)
        throw CapExceeded("labeled enumeration refuses n = " + std::to_string(n) + ": exceeds cap " +
                              std::to_string(cap),
                          cap);
    end_mask_ = std::uint64_t{1} << pair_count(n);
}

std::optional<Graph> ConnectedGraphCursor::next() {
    while (next_mask_ < end_mask_) {
        const std::uint64_t m = next_mask_++;
        if (mask_is_connected(n_, m)) {
            last_mask_ = m;
            return graph_from_mask(n_, m);
        }
    }
    return std::nullopt;
}

}  // namespace kiso
