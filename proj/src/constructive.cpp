#include "kiso/constructive.hpp"

#include "kiso/cliques.hpp"
#include "kiso/isolation.hpp"

namespace kiso {

const char* to_string(BranchTag tag) {
    switch (tag) {
        case BranchTag::BaseSmall: return "BaseSmall";
        case BranchTag::NoClique: return "NoClique";
        case BranchTag::DominatingVertex: return "DominatingVertex";
        case BranchTag::NoExceptional: return "NoExceptional";
        case BranchTag::Case1Sub1: return "Case1_Sub1";
        case BranchTag::Case1Sub2: return "Case1_Sub2";
        case BranchTag::Case1Sub3: return "Case1_Sub3";
        case BranchTag::Case2: return "Case2";
    }
    return "unknown";
}

int LinkageTable::link_count(std::size_t c) const {
    int count = 0;
    for (char l : linked[c]) count += l ? 1 : 0;
    return count;
}

int LinkageTable::sole_link(std::size_t c) const {
    if (link_count(c) != 1) return -1;
    for (std::size_t i = 0; i < neighbors.size(); ++i)
        if (linked[c][i]) return neighbors[i];
    return -1;
}

bool LinkageTable::linked_to(std::size_t c, int x) const {
    for (std::size_t i = 0; i < neighbors.size(); ++i)
        if (neighbors[i] == x) return linked[c][i] != 0;
    return false;
}

bool linked_to(const Graph& g, const VertexSet& h, int x) {
    g.check_subset(h);
    g.check_vertex(x);
    if (h.contains(x)) throw InputError("vertex " + std::to_string(x) + " lies inside the component");
    return g.neighbors(x).intersects(h);
}

LinkageTable build_linkage(const Graph& g, int k, int v) {
    g.check_vertex(v);
    const VertexSet closed = g.closed_neighbors(v);
    if (closed.count() == g.order())
        throw InputError("N[" + std::to_string(v) + "] covers the graph; no residual to classify");
    LinkageTable t;
    t.pivot = v;
    t.neighbors = g.neighbors(v).members();
    t.components = components(g, closed.complement());
    for (const VertexSet& h : t.components) {
        t.kinds.push_back(classify_exception(induced(g, h).graph, k));
        std::vector<char> row;
        row.reserve(t.neighbors.size());
        for (int x : t.neighbors) row.push_back(g.neighbors(x).intersects(h) ? 1 : 0);
        t.linked.push_back(std::move(row));
    }
    return t;
}

namespace {

[[noreturn]] void broken(const std::string& what) {
    throw std::logic_error("bound construction invariant violated: " + what);
}

void expect(bool ok, const char* what) {
    if (!ok) broken(what);
}

int smallest(const VertexSet& s) {
    const int v = s.first();
    expect(v >= 0, "expected a nonempty vertex set");
    return v;
}

VertexSet singleton(int n, int v) {
    VertexSet s(n);
    s.insert(v);
    return s;
}

class Construction {
public:
    Construction(int k, BoundOptions options) : k_(k), options_(options) {}

    std::vector<TraceStep> take_trace() { return std::move(trace_); }

    // Isolating set of g (local labels); global maps local labels to the
    // top-level graph for the trace.
    VertexSet solve(const Graph& g, const std::vector<int>& global, int depth) {
        expect(is_connected(g), "recursive input must be connected");
        expect(classify_exception(g, k_) == ExceptionKind::None, "recursive input must be unexceptional");
        const int n = g.order();

        if (n <= 2) {
            VertexSet d(n);
            if (has_k_clique(g, k_)) d.insert(0);  // only K_2 at k = 1
            record(BranchTag::BaseSmall, global, depth, -1, -1, d);
            return finish(g, d, BranchTag::BaseSmall);
        }

        const auto clique = find_k_clique(g, k_);
        if (!clique) {
            VertexSet d(n);
            record(BranchTag::NoClique, global, depth, -1, -1, d);
            return finish(g, d, BranchTag::NoClique);
        }

        int v = -1;
        for (int c = clique->first(); c >= 0; c = clique->next(c + 1)) {
            if (!(g.closed_neighbors(c) - *clique).empty()) {
                v = c;
                break;
            }
        }
        expect(v >= 0, "a clique vertex with an outside neighbour exists");

        if (g.closed_neighbors(v).count() == n) {
            const VertexSet d = singleton(n, v);
            record(BranchTag::DominatingVertex, global, depth, v, -1, d);
            return finish(g, d, BranchTag::DominatingVertex);
        }

        const LinkageTable table = build_linkage(g, k_, v);
        bool any_exceptional = false;
        for (std::size_t c = 0; c < table.components.size(); ++c) any_exceptional |= table.exceptional(c);

        if (!any_exceptional) {
            VertexSet d = singleton(n, v);
            record(BranchTag::NoExceptional, global, depth, v, -1, d);
            for (const VertexSet& h : table.components) d |= solve_part(g, h, global, depth);
            return finish(g, d, BranchTag::NoExceptional);
        }

        for (std::size_t c = 0; c < table.components.size(); ++c) {
            if (table.exceptional(c) && table.sole_link(c) >= 0)
                return case_two(g, global, depth, table, table.sole_link(c));
        }
        return case_one(g, global, depth, table);
    }

private:
    VertexSet solve_part(const Graph& g, const VertexSet& part, const std::vector<int>& global, int depth) {
        const SubGraph sub = induced(g, part);
        std::vector<int> sub_global;
        sub_global.reserve(sub.to_parent.size());
        for (int u : sub.to_parent) sub_global.push_back(global[static_cast<std::size_t>(u)]);
        return sub.lift(solve(sub.graph, sub_global, depth + 1), g.order());
    }

    void record(BranchTag tag, const std::vector<int>& global, int depth, int pivot, int link,
                const VertexSet& chosen) {
        auto to_global = [&](int u) { return u < 0 ? -1 : global[static_cast<std::size_t>(u)]; };
        TraceStep step;
        step.tag = tag;
        step.depth = depth;
        step.pivot = to_global(pivot);
        step.link = to_global(link);
        step.scope = global;
        chosen.for_each([&](int u) { step.chosen.push_back(to_global(u)); });
        trace_.push_back(std::move(step));
    }

    VertexSet finish(const Graph& g, const VertexSet& d, BranchTag tag) {
        const int bound = g.order() / (k_ + 1);
        if (d.count() > bound)
            broken(std::string(to_string(tag)) + " produced " + std::to_string(d.count()) +
                   " vertices against bound " + std::to_string(bound));
        if (options_.verify_each_step && !verify_isolating(g, k_, d).valid)
            broken(std::string(to_string(tag)) + " produced a non-isolating set");
        return d;
    }

    // Components of g[rest]: the one holding v first, the others after.
    std::pair<VertexSet, std::vector<VertexSet>> split_at(const Graph& g, const VertexSet& rest, int v) const {
        std::pair<VertexSet, std::vector<VertexSet>> out;
        for (VertexSet& comp : components(g, rest)) {
            if (comp.contains(v))
                out.first = std::move(comp);
            else
                out.second.push_back(std::move(comp));
        }
        expect(out.first.universe() == g.order(), "pivot survives the split");
        return out;
    }

    // Some exceptional component H' of G - N[v] is linked to x only.
    VertexSet case_two(const Graph& g, const std::vector<int>& global, int depth, const LinkageTable& table, int x) {
        const int n = g.order();
        const int v = table.pivot;
        VertexSet x_part = singleton(n, x);  // X
        VertexSet d = singleton(n, x);       // D_X, grows below
        std::size_t lone_unexceptional = 0;  // |H_2|
        for (std::size_t c = 0; c < table.components.size(); ++c) {
            if (table.sole_link(c) != x) continue;
            const VertexSet& h = table.components[c];
            if (!table.exceptional(c)) {
                ++lone_unexceptional;
                continue;
            }
            x_part |= h;
            if (table.kinds[c] == ExceptionKind::FiveCycleAtK2) {
                const int y = smallest(g.neighbors(x) & h);
                d.insert(smallest(h - g.closed_neighbors(y)));
            }
        }

        auto [star, others] = split_at(g, x_part.complement(), v);
        expect(others.size() == lone_unexceptional, "G - X splits into G*_v and H_2");

        const SubGraph star_graph = induced(g, star);
        const ExceptionKind star_kind = classify_exception(star_graph.graph, k_);
        if (star_kind == ExceptionKind::FiveCycleAtK2) {
            // x already covers v; the vertex opposite v finishes the cycle.
            d.insert(smallest(star - g.closed_neighbors(v)));
        }
        record(BranchTag::Case2, global, depth, v, x, d);
        if (star_kind == ExceptionKind::None) d |= solve_part(g, star, global, depth);
        for (const VertexSet& h : others) d |= solve_part(g, h, global, depth);
        return finish(g, d, BranchTag::Case2);
    }

    // Every exceptional component of G - N[v] is linked to at least two of N(v).
    VertexSet case_one(const Graph& g, const std::vector<int>& global, int depth, const LinkageTable& table) {
        const int n = g.order();
        const int v = table.pivot;

        std::size_t chosen_c = 0;
        while (!table.exceptional(chosen_c)) ++chosen_c;
        const VertexSet& h_prime = table.components[chosen_c];
        const bool h_prime_is_cycle = table.kinds[chosen_c] == ExceptionKind::FiveCycleAtK2;

        int x = -1;
        for (int cand : table.neighbors) {
            if (table.linked_to(chosen_c, cand)) {
                x = cand;
                break;
            }
        }
        expect(x >= 0, "H' is linked to some neighbour of v");

        std::size_t lone_count = 0;  // |H_x|
        for (std::size_t c = 0; c < table.components.size(); ++c) {
            if (table.sole_link(c) == x) {
                expect(!table.exceptional(c), "H_x has no exceptional members in Case 1");
                ++lone_count;
            }
        }

        const int y = smallest(g.neighbors(x) & h_prime);
        const int y_far = h_prime_is_cycle ? smallest(h_prime - g.closed_neighbors(y)) : -1;

        VertexSet x_part = h_prime;  // X
        x_part.insert(x);
        auto [star, lone] = split_at(g, x_part.complement(), v);
        expect(lone.size() == lone_count, "G - X splits into G*_v and H_x");

        const ExceptionKind star_kind = classify_exception(induced(g, star).graph, k_);
        if (star_kind == ExceptionKind::None) {
            VertexSet d = singleton(n, y);
            if (y_far >= 0) d.insert(y_far);
            record(BranchTag::Case1Sub1, global, depth, v, x, d);
            d |= solve_part(g, star, global, depth);
            for (const VertexSet& h : lone) d |= solve_part(g, h, global, depth);
            return finish(g, d, BranchTag::Case1Sub1);
        }
        if (star_kind == ExceptionKind::FiveCycleAtK2)
            return subcase_cycle(g, global, depth, v, x, y, h_prime, star);
        return subcase_clique(g, global, depth, v, x, y, y_far, h_prime, star, lone);
    }

    // G*_v is a k-clique.
    VertexSet subcase_clique(const Graph& g, const std::vector<int>& global, int depth, int v, int x, int y,
                             int y_far, const VertexSet& h_prime, const VertexSet& star,
                             const std::vector<VertexSet>& lone) {
        const int n = g.order();
        VertexSet star_expected = g.closed_neighbors(v);
        star_expected.erase(x);
        expect(star == star_expected, "G*_v = N[v] - {x}");

        VertexSet x_cut = singleton(n, y);  // X'
        VertexSet d = singleton(n, x);      // D''
        if (y_far >= 0) {
            x_cut.insert(y_far);
            x_cut |= g.neighbors(y_far) & h_prime;
            d.insert(y_far);
        }
        VertexSet removed = x_cut;
        removed.insert(v);
        removed.insert(x);
        const VertexSet y_region = (h_prime | star) - removed;  // Y; x is already in removed

        const auto c_y = find_k_clique(g, k_, y_region);
        if (!c_y) {
            record(BranchTag::Case1Sub2, global, depth, v, x, d);
            for (const VertexSet& h : lone) d |= solve_part(g, h, global, depth);
            return finish(g, d, BranchTag::Case1Sub2);
        }

        expect(k_ >= 2, "Y is empty when k = 1");
        const int z = smallest(*c_y & star);
        const VertexSet z_region = star | *c_y;  // Z, inside N[z]

        if (!lone.empty()) {
            d = singleton(n, z);
            record(BranchTag::Case1Sub2, global, depth, v, x, d);
            d |= solve_part(g, z_region.complement(), global, depth);
            return finish(g, d, BranchTag::Case1Sub2);
        }

        // Terminal configurations: V(G) = G*_v + x + H'.
        if (y_far < 0) {
            expect(n == 2 * k_ + 1, "terminal clique configuration has 2k+1 vertices");
            if (z_region.count() >= k_ + 2) {
                d = singleton(n, z);
            } else {
                const int z_prime = smallest(*c_y & h_prime);
                if (k_ >= 3) {
                    d = singleton(n, z_prime);
                } else {
                    // Five vertices spanning a 5-cycle but not equal to one.
                    int w = -1;
                    for (int u = 0; u < n && w < 0; ++u)
                        if (g.degree(u) >= 3) w = u;
                    expect(w >= 0, "some vertex has degree >= 3");
                    d = singleton(n, w);
                }
            }
        } else {
            expect(n == 8, "terminal 5-cycle configuration has 8 vertices");
            d = singleton(n, y);
            d.insert(smallest(*c_y & h_prime));
        }
        record(BranchTag::Case1Sub2, global, depth, v, x, d);
        return finish(g, d, BranchTag::Case1Sub2);
    }

    // k = 2 and G*_v is a 5-cycle v v1 v2 v3 v4.
    VertexSet subcase_cycle(const Graph& g, const std::vector<int>& global, int depth, int v, int x, int y,
                            const VertexSet& h_prime, const VertexSet& star) {
        const int n = g.order();
        auto step = [&](int from, int prev) {
            VertexSet next = g.neighbors(from) & star;
            next.erase(prev);
            return smallest(next);
        };
        const int v1 = smallest(g.neighbors(v) & star);
        const int v2 = step(v1, v);
        const int v3 = step(v2, v1);
        const int v4 = step(v3, v2);
        VertexSet y_region(n);  // Y
        y_region.insert(v2);
        y_region.insert(v3);
        y_region.insert(v4);

        const VertexSet rest = y_region.complement();
        const SubGraph rest_graph = induced(g, rest);
        expect(is_connected(rest_graph.graph), "G - Y is connected");

        if (!is_five_cycle(rest_graph.graph)) {
            VertexSet d = singleton(n, v3);
            record(BranchTag::Case1Sub3, global, depth, v, x, d);
            d |= solve_part(g, rest, global, depth);
            return finish(g, d, BranchTag::Case1Sub3);
        }

        expect(h_prime.count() == 2, "H' is a 2-clique when G - Y is a 5-cycle");
        VertexSet d = singleton(n, v);
        d.insert(g.has_edge(v3, y) ? v3 : v1);
        record(BranchTag::Case1Sub3, global, depth, v, x, d);
        return finish(g, d, BranchTag::Case1Sub3);
    }

    int k_;
    BoundOptions options_;
    std::vector<TraceStep> trace_;
};

void check_k(int k) {
    if (k < 1) throw InputError("k must be at least 1, got " + std::to_string(k));
}

BoundResult bound_connected(const Graph& g, int k, BoundOptions options) {
    std::vector<int> identity(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) identity[static_cast<std::size_t>(i)] = i;
    Construction construction(k, options);
    BoundResult result;
    result.set = construction.solve(g, identity, 0);
    result.bound = g.order() / (k + 1);
    result.trace = construction.take_trace();
    expect(verify_isolating(g, k, result.set).valid, "final set isolates every k-clique");
    return result;
}

}  // namespace

BoundResult theorem1_set(const Graph& g, int k, BoundOptions options) {
    check_k(k);
    if (!is_connected(g))
        throw BoundPreconditionError("graph is not connected; use per-component mode", ExceptionKind::None, true);
    const ExceptionKind kind = classify_exception(g, k);
    if (kind != ExceptionKind::None)
        throw BoundPreconditionError(std::string("exceptional: ") + to_string(kind), kind, false);
    return bound_connected(g, k, options);
}

std::vector<ComponentBound> theorem1_per_component(const Graph& g, int k, BoundOptions options) {
    check_k(k);
    std::vector<ComponentBound> out;
    for (const VertexSet& members : components(g)) {
        const SubGraph piece = induced(g, members);
        const ExceptionKind kind = classify_exception(piece.graph, k);
        ComponentBound entry{members, ExceptionalComponent{}};
        if (kind != ExceptionKind::None) {
            VertexSet forced(piece.graph.order());
            forced.insert(0);
            if (kind == ExceptionKind::FiveCycleAtK2) forced.insert(smallest(piece.graph.closed_neighbors(0).complement()));
            entry.outcome = ExceptionalComponent{kind, piece.lift(forced, g.order())};
        } else {
            BoundResult local = bound_connected(piece.graph, k, options);
            local.set = piece.lift(local.set, g.order());
            for (TraceStep& step : local.trace) {
                auto lift = [&](int u) { return u < 0 ? -1 : piece.to_parent[static_cast<std::size_t>(u)]; };
                step.pivot = lift(step.pivot);
                step.link = lift(step.link);
                for (int& u : step.scope) u = lift(u);
                for (int& u : step.chosen) u = lift(u);
            }
            entry.outcome = std::move(local);
        }
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace kiso
