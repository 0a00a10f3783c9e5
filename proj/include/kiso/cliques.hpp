#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kiso/graph.hpp"

namespace kiso {

struct CliqueQuery {
    int k = 1;
    std::optional<std::size_t> limit;
};

// Searches grow a clique one vertex at a time in increasing vertex order,
// pruning candidates whose degree inside the candidate pool is below k-1.
// Results therefore come out in lexicographic order of the sorted member lists.

bool has_k_clique(const Graph& g, int k);
bool has_k_clique(const Graph& g, int k, const VertexSet& within);

// Lexicographically smallest k-clique, if any.
std::optional<VertexSet> find_k_clique(const Graph& g, int k);
std::optional<VertexSet> find_k_clique(const Graph& g, int k, const VertexSet& within);

// All k-cliques in lexicographic order, truncated to q.limit.
// Splits the search by smallest member across OpenMP threads; output order
// does not depend on the thread count.
std::vector<VertexSet> enumerate_k_cliques(const Graph& g, const CliqueQuery& q);

// Single-threaded reference for enumerate_k_cliques.
std::vector<VertexSet> enumerate_k_cliques_serial(const Graph& g, const CliqueQuery& q);

}  // namespace kiso
