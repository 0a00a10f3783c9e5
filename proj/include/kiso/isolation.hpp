#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "kiso/graph.hpp"

namespace kiso {

// Outcome of checking whether G - N[D] is free of k-cliques.
struct IsolationCertificate {
    VertexSet candidate;
    bool valid = false;
    std::optional<VertexSet> witness;  // a k-clique of G - N[D], present iff !valid
    int residual_size = 0;             // |V(G - N[D])|
};

struct SolveReport {
    int iota = 0;
    VertexSet optimal_set;
    std::uint64_t nodes_expanded = 0;
    std::chrono::duration<double> elapsed{};
};

struct OracleOptions {
    int cap = 20;
};

IsolationCertificate verify_isolating(const Graph& g, int k, const VertexSet& d);

// Exhaustive search by increasing size, lexicographic within a size; the
// first isolating set found is returned. Each size level is scanned in
// parallel by combination rank, keeping the smallest passing rank, so the
// result matches iota_oracle_serial exactly. nodes_expanded counts the
// subsets a sequential scan would have tested.
SolveReport iota_oracle(const Graph& g, int k, OracleOptions options = {});
SolveReport iota_oracle_serial(const Graph& g, int k, OracleOptions options = {});

// Exact branch and bound, solved component by component.
SolveReport iota_solve(const Graph& g, int k);

// Repeatedly takes the highest residual-degree vertex of the first k-clique
// left in the residual (ties to the smaller index). Always isolating.
VertexSet greedy_upper_bound(const Graph& g, int k);

}  // namespace kiso
