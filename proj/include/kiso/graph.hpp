#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kiso/vertex_set.hpp"

namespace kiso {

// Raised for malformed caller input: out-of-range vertices, bad k, bad parameters.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when a bounded exhaustive routine is asked to exceed its size cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, int cap) : std::runtime_error(what), cap_(cap) {}
    int cap() const { return cap_; }

private:
    int cap_;
};

using Edge = std::pair<int, int>;

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    // Duplicate edges collapse; self-loops and out-of-range endpoints throw InputError.
    Graph(int n, const std::vector<Edge>& edges);

    int order() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return edge_count_; }

    const VertexSet& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    VertexSet closed_neighbors(int v) const;
    int degree(int v) const { return neighbors(v).count(); }
    bool has_edge(int u, int v) const { return neighbors(u).contains(v); }
    VertexSet vertices() const { return VertexSet::full(order()); }

    // Edges with u < v, sorted ascending.
    std::vector<Edge> edges() const;

    void check_vertex(int v) const;
    void check_subset(const VertexSet& s) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexSet> adjacency_;
    int edge_count_ = 0;
};

// A graph carved out of a parent graph together with the map from its own
// labels back to the parent's labels (ascending, so order is preserved).
struct SubGraph {
    Graph graph;
    std::vector<int> to_parent;

    VertexSet lift(const VertexSet& local, int parent_order) const;
    std::vector<int> lift(const std::vector<int>& local) const;
};

enum class ExceptionKind { None, KClique, FiveCycleAtK2 };

const char* to_string(ExceptionKind kind);

// Builds a vertex set over V(G); out-of-range members throw InputError.
VertexSet make_vertex_set(const Graph& g, const std::vector<int>& members);

// N[S] = union of N[v] over v in S.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

// G - S.
SubGraph remove_vertices(const Graph& g, const VertexSet& s);

// G[S].
SubGraph induced(const Graph& g, const VertexSet& s);

// Partition of V(G) into components, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

// Components of G[within], ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);

// False for the empty graph.
bool is_connected(const Graph& g);

bool is_complete(const Graph& g);
bool is_five_cycle(const Graph& g);

ExceptionKind classify_exception(const Graph& g, int k);

}  // namespace kiso
