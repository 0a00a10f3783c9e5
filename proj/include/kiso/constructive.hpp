#pragma once

#include <string>
#include <variant>
#include <vector>

#include "kiso/graph.hpp"

namespace kiso {

enum class BranchTag {
    BaseSmall,         // n <= 2
    NoClique,          // no k-clique at all
    DominatingVertex,  // N[v] = V(G)
    NoExceptional,     // no component of G - N[v] is exceptional
    Case1Sub1,         // every exceptional component has >= 2 links; G*_v unexceptional
    Case1Sub2,         // ... G*_v is a k-clique
    Case1Sub3,         // ... G*_v is a 5-cycle (k = 2)
    Case2,             // some exceptional component is linked to one neighbour only
};

const char* to_string(BranchTag tag);

// One fired branch. Vertex labels are those of the top-level input graph.
struct TraceStep {
    BranchTag tag;
    int depth = 0;
    int pivot = -1;             // v, when the branch picks one
    int link = -1;              // x, for the Case branches
    std::vector<int> scope;     // vertex set of the subproblem
    std::vector<int> chosen;    // vertices this step puts into D directly
};

struct BoundResult {
    VertexSet set;
    int bound = 0;  // floor(n/(k+1))
    std::vector<TraceStep> trace;
};

// Components of G - N[v] and how each is linked to the neighbours of v.
struct LinkageTable {
    int pivot = -1;
    std::vector<int> neighbors;               // N(v), ascending
    std::vector<VertexSet> components;        // ordered by smallest member
    std::vector<ExceptionKind> kinds;         // per component
    std::vector<std::vector<char>> linked;    // [component][neighbor index]

    bool exceptional(std::size_t c) const { return kinds[c] != ExceptionKind::None; }
    int link_count(std::size_t c) const;
    // Neighbour x when component c is linked to exactly one of N(v), else -1.
    int sole_link(std::size_t c) const;
    bool linked_to(std::size_t c, int x) const;
};

// True iff some vertex of h is adjacent to x. x must lie outside h.
bool linked_to(const Graph& g, const VertexSet& h, int x);

// Requires V(G) != N[v].
LinkageTable build_linkage(const Graph& g, int k, int v);

// theorem1_set input that is disconnected or exceptional.
class BoundPreconditionError : public InputError {
public:
    BoundPreconditionError(const std::string& what, ExceptionKind kind, bool disconnected)
        : InputError(what), kind_(kind), disconnected_(disconnected) {}
    ExceptionKind kind() const { return kind_; }
    bool disconnected() const { return disconnected_; }

private:
    ExceptionKind kind_;
    bool disconnected_;
};

struct BoundOptions {
    // Verify the set returned by every recursive call, not only the final one.
    bool verify_each_step = false;
};

// Isolating set of size <= floor(n/(k+1)) for a connected graph that is
// neither K_k nor (k = 2) C_5. Recursively built sets stand in for the
// minimum sets of the induction; only their size bound is ever used.
// Ties are always broken towards the smallest vertex index.
BoundResult theorem1_set(const Graph& g, int k, BoundOptions options = {});

struct ExceptionalComponent {
    ExceptionKind kind = ExceptionKind::None;
    VertexSet forced_set;  // optimal: one vertex of K_k, two vertices at distance 2 on C_5
};

struct ComponentBound {
    VertexSet members;
    std::variant<BoundResult, ExceptionalComponent> outcome;
};

// theorem1_set applied per component; sets and traces use G's labels.
std::vector<ComponentBound> theorem1_per_component(const Graph& g, int k, BoundOptions options = {});

}  // namespace kiso
