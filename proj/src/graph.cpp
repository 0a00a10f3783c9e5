#include "kiso/graph.hpp"

namespace kiso {

Graph::Graph(int n) {
    if (n < 0) throw InputError("negative vertex count");
    adjacency_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        if (adjacency_[static_cast<std::size_t>(u)].contains(v)) continue;
        adjacency_[static_cast<std::size_t>(u)].insert(v);
        adjacency_[static_cast<std::size_t>(v)].insert(u);
        ++edge_count_;
    }
}

VertexSet Graph::closed_neighbors(int v) const {
    VertexSet s = neighbors(v);
    s.insert(v);
    return s;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < order(); ++u) {
        for (int v = neighbors(u).next(u + 1); v >= 0; v = neighbors(u).next(v + 1)) out.emplace_back(u, v);
    }
    return out;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= order())
        throw InputError("vertex " + std::to_string(v) + " out of range for graph of order " +
                         std::to_string(order()));
}

void Graph::check_subset(const VertexSet& s) const {
    if (s.universe() != order())
        throw InputError("vertex set over universe " + std::to_string(s.universe()) +
                         " used with graph of order " + std::to_string(order()));
}

VertexSet SubGraph::lift(const VertexSet& local, int parent_order) const {
    VertexSet out(parent_order);
    local.for_each([&](int v) { out.insert(to_parent[static_cast<std::size_t>(v)]); });
    return out;
}

std::vector<int> SubGraph::lift(const std::vector<int>& local) const {
    std::vector<int> out;
    out.reserve(local.size());
    for (int v : local) out.push_back(to_parent[static_cast<std::size_t>(v)]);
    return out;
}

const char* to_string(ExceptionKind kind) {
    switch (kind) {
        case ExceptionKind::None: return "none";
        case ExceptionKind::KClique: return "k-clique";
        case ExceptionKind::FiveCycleAtK2: return "5-cycle at k=2";
    }
    return "unknown";
}

VertexSet make_vertex_set(const Graph& g, const std::vector<int>& members) {
    VertexSet s(g.order());
    for (int v : members) {
        g.check_vertex(v);
        s.insert(v);
    }
    return s;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    g.check_subset(s);
    VertexSet out = s;
    s.for_each([&](int v) { out |= g.neighbors(v); });
    return out;
}

SubGraph induced(const Graph& g, const VertexSet& s) {
    g.check_subset(s);
    SubGraph sub;
    sub.to_parent = s.members();
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i) local[static_cast<std::size_t>(sub.to_parent[i])] = static_cast<int>(i);

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
        const int u = sub.to_parent[i];
        const VertexSet& nu = g.neighbors(u);
        for (int w = nu.next(u + 1); w >= 0; w = nu.next(w + 1)) {
            if (local[static_cast<std::size_t>(w)] >= 0) edges.emplace_back(static_cast<int>(i), local[static_cast<std::size_t>(w)]);
        }
    }
    sub.graph = Graph(static_cast<int>(sub.to_parent.size()), edges);
    return sub;
}

SubGraph remove_vertices(const Graph& g, const VertexSet& s) {
    g.check_subset(s);
    return induced(g, s.complement());
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
    g.check_subset(within);
    std::vector<VertexSet> out;
    VertexSet unseen = within;
    for (int root = unseen.first(); root >= 0; root = unseen.first()) {
        VertexSet comp(g.order());
        VertexSet frontier(g.order());
        frontier.insert(root);
        while (!frontier.empty()) {
            comp |= frontier;
            unseen -= frontier;
            VertexSet next(g.order());
            frontier.for_each([&](int v) { next |= g.neighbors(v); });
            next &= unseen;
            frontier = std::move(next);
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_connected(const Graph& g) { return g.order() >= 1 && components(g).size() == 1; }

bool is_complete(const Graph& g) {
    const long long n = g.order();
    return g.edge_count() == n * (n - 1) / 2;
}

bool is_five_cycle(const Graph& g) {
    if (g.order() != 5 || g.edge_count() != 5) return false;
    for (int v = 0; v < 5; ++v)
        if (g.degree(v) != 2) return false;
    return is_connected(g);
}

ExceptionKind classify_exception(const Graph& g, int k) {
    if (k < 1) throw InputError("k must be at least 1");
    if (g.order() == k && is_complete(g)) return ExceptionKind::KClique;
    if (k == 2 && is_five_cycle(g)) return ExceptionKind::FiveCycleAtK2;
    return ExceptionKind::None;
}

}  // namespace kiso
