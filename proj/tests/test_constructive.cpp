#include <doctest.h>

#include <random>
#include <set>

#include "kiso/cliques.hpp"
#include "kiso/constructive.hpp"
#include "kiso/generators.hpp"
#include "kiso/isolation.hpp"
#include "support/brute.hpp"

using namespace kiso;

namespace {

const BoundOptions kChecked{true};

// Replays a trace against the graph it came from: the root covers V(G), each
// step picks vertices from its own scope, nested scopes shrink, and the
// union of all picks is the returned set.
void check_trace(const Graph& g, const BoundResult& r) {
    REQUIRE_FALSE(r.trace.empty());
    CHECK(r.trace.front().depth == 0);
    CHECK(r.trace.front().scope == g.vertices().members());
    VertexSet picked(g.order());
    std::vector<std::vector<int>> open{r.trace.front().scope};
    for (const TraceStep& step : r.trace) {
        REQUIRE(step.depth >= 0);
        REQUIRE(static_cast<std::size_t>(step.depth) <= open.size());
        open.resize(static_cast<std::size_t>(step.depth) + 1);
        if (step.depth > 0) {
            const std::set<int> parent(open[static_cast<std::size_t>(step.depth) - 1].begin(),
                                       open[static_cast<std::size_t>(step.depth) - 1].end());
            for (int u : step.scope) CHECK(parent.count(u) == 1);
            CHECK(step.scope.size() < parent.size());
        }
        open[static_cast<std::size_t>(step.depth)] = step.scope;
        const std::set<int> scope(step.scope.begin(), step.scope.end());
        for (int u : step.chosen) {
            CHECK(scope.count(u) == 1);
            picked.insert(u);
        }
        if (step.pivot >= 0) CHECK(scope.count(step.pivot) == 1);
        if (step.link >= 0) CHECK(scope.count(step.link) == 1);
    }
    CHECK(picked == r.set);
}

void check_bound(const Graph& g, int k, std::set<BranchTag>* seen = nullptr) {
    const BoundResult r = theorem1_set(g, k, kChecked);
    CHECK(r.bound == g.order() / (k + 1));
    CHECK(r.set.count() <= r.bound);
    CHECK(brute::isolates(g, k, r.set.members()));
    check_trace(g, r);
    if (seen)
        for (const TraceStep& step : r.trace) seen->insert(step.tag);
}

}  // namespace

TEST_CASE("bound examples") {
    const Graph b92 = build_extremal(9, 2);
    const BoundResult r = theorem1_set(b92, 2);
    CHECK(r.set.count() <= 3);
    CHECK(verify_isolating(b92, 2, r.set).valid);
    CHECK(iota_solve(b92, 2).iota == 3);
    CHECK(r.set.count() == 3);

    const BoundResult p2 = theorem1_set(build_path(2), 1);
    CHECK(p2.set.members() == std::vector<int>{0});
    CHECK(p2.bound == 1);

    const BoundResult c6 = theorem1_set(build_cycle(6), 3);
    CHECK(c6.set.empty());
    REQUIRE(c6.trace.size() == 1);
    CHECK(c6.trace[0].tag == BranchTag::NoClique);

    // K4 with a pendant vertex on 0.
    const Graph pendant(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
    const BoundResult dom = theorem1_set(pendant, 4);
    CHECK(dom.set.members() == std::vector<int>{0});
    REQUIRE(dom.trace.size() == 1);
    CHECK(dom.trace[0].tag == BranchTag::DominatingVertex);
    CHECK(dom.trace[0].pivot == 0);

    const Graph b12 = build_extremal(12, 3);
    CHECK(theorem1_set(b12, 3).set.count() <= 3);
}

TEST_CASE("bound refuses inapplicable input") {
    try {
        theorem1_set(build_cycle(5), 2);
        FAIL("expected refusal");
    } catch (const BoundPreconditionError& e) {
        CHECK(e.kind() == ExceptionKind::FiveCycleAtK2);
        CHECK_FALSE(e.disconnected());
        CHECK(std::string(e.what()) == "exceptional: 5-cycle at k=2");
    }
    try {
        theorem1_set(build_complete(4), 4);
        FAIL("expected refusal");
    } catch (const BoundPreconditionError& e) {
        CHECK(e.kind() == ExceptionKind::KClique);
    }
    try {
        theorem1_set(Graph(2), 1);
        FAIL("expected refusal");
    } catch (const BoundPreconditionError& e) {
        CHECK(e.disconnected());
    }
    CHECK_THROWS_AS(theorem1_set(build_path(3), 0), InputError);
    CHECK_THROWS_AS(theorem1_set(Graph(0), 1), BoundPreconditionError);
    CHECK(theorem1_set(build_cycle(5), 3).set.empty());
}

TEST_CASE("linked_to") {
    const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(linked_to(star, VertexSet(4, {1}), 0));
    const Graph two(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(linked_to(two, VertexSet(4, {2, 3}), 0));
    CHECK_THROWS_AS(linked_to(two, VertexSet(4, {2, 3}), 2), InputError);

    // v = 0 with neighbours 1 and 2; a 5-cycle on 3..7 hangs off 1 by the chord 1-3.
    const Graph g(8, {{0, 1}, {0, 2}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 3}});
    const VertexSet cycle(8, {3, 4, 5, 6, 7});
    CHECK(linked_to(g, cycle, 1));
    CHECK_FALSE(linked_to(g, cycle, 2));
    const LinkageTable t = build_linkage(g, 2, 0);
    REQUIRE(t.components.size() == 1);
    CHECK(t.components[0] == cycle);
    CHECK(t.kinds[0] == ExceptionKind::FiveCycleAtK2);
    CHECK(t.sole_link(0) == 1);
    CHECK(build_linkage(g, 3, 0).kinds[0] == ExceptionKind::None);
}

TEST_CASE("build_linkage on the extremal graph") {
    // B_{6,2}: path 0-1, pair {2,3} on 0, pair {4,5} on 1.
    const Graph g = build_extremal(6, 2);
    const LinkageTable t = build_linkage(g, 2, 0);
    CHECK(t.neighbors == std::vector<int>{1, 2, 3});
    REQUIRE(t.components.size() == 1);
    CHECK(t.components[0].members() == std::vector<int>{4, 5});
    CHECK(t.exceptional(0));
    CHECK(t.kinds[0] == ExceptionKind::KClique);
    CHECK(t.link_count(0) == 1);
    CHECK(t.sole_link(0) == 1);
    CHECK(t.linked_to(0, 1));
    CHECK_FALSE(t.linked_to(0, 2));

    // Two neighbours of v link to one K2: Case 1 territory.
    const Graph h(5, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}});
    const LinkageTable u = build_linkage(h, 2, 0);
    REQUIRE(u.components.size() == 1);
    CHECK(u.exceptional(0));
    CHECK(u.link_count(0) == 2);
    CHECK(u.sole_link(0) == -1);

    const LinkageTable none = build_linkage(build_path(6), 3, 0);
    for (std::size_t c = 0; c < none.components.size(); ++c) CHECK_FALSE(none.exceptional(c));
    CHECK_THROWS_AS(build_linkage(build_complete(3), 2, 0), InputError);
}

TEST_CASE("per-component bounds") {
    const Graph g = disjoint_union({build_complete(3), build_path(4)});
    const auto parts = theorem1_per_component(g, 3);
    REQUIRE(parts.size() == 2);
    const auto* ex = std::get_if<ExceptionalComponent>(&parts[0].outcome);
    REQUIRE(ex);
    CHECK(ex->kind == ExceptionKind::KClique);
    CHECK(ex->forced_set.count() == 1);
    const auto* rest = std::get_if<BoundResult>(&parts[1].outcome);
    REQUIRE(rest);
    CHECK(rest->set.empty());
    CHECK(parts[1].members.members() == std::vector<int>{3, 4, 5, 6});

    const Graph twin = disjoint_union({build_extremal(6, 2), build_extremal(6, 2)});
    VertexSet all(12);
    for (const ComponentBound& part : theorem1_per_component(twin, 2)) {
        const auto* b = std::get_if<BoundResult>(&part.outcome);
        REQUIRE(b);
        CHECK(b->set.count() <= 2);
        CHECK(b->set.is_subset_of(part.members));
        for (const TraceStep& step : b->trace)
            for (int u : step.scope) CHECK(part.members.contains(u));
        all |= b->set;
    }
    CHECK(verify_isolating(twin, 2, all).valid);

    const Graph c5x2 = disjoint_union({build_cycle(5), build_cycle(5)});
    VertexSet forced(10);
    for (const ComponentBound& part : theorem1_per_component(c5x2, 2)) {
        const auto& e = std::get<ExceptionalComponent>(part.outcome);
        CHECK(e.kind == ExceptionKind::FiveCycleAtK2);
        CHECK(e.forced_set.count() == 2);
        forced |= e.forced_set;
    }
    CHECK(verify_isolating(c5x2, 2, forced).valid);

    const Graph single = build_extremal(9, 2);
    const auto one = theorem1_per_component(single, 2);
    REQUIRE(one.size() == 1);
    CHECK(std::get<BoundResult>(one[0].outcome).set == theorem1_set(single, 2).set);
}

TEST_CASE("extremal graphs are tight") {
    for (int k = 1; k <= 4; ++k) {
        for (int n = k + 1; n <= 16; n += k + 1) {
            const Graph g = build_extremal(n, k);
            const BoundResult r = theorem1_set(g, k, kChecked);
            CHECK(r.set.count() == n / (k + 1));
            CHECK(iota_solve(g, k).iota == n / (k + 1));
        }
    }
}

TEST_CASE("five-cycle subcase") {
    // v = 0 on the 5-cycle 0-4-5-6-7, x = 1, and the edge {2,3} hangs between 1 and 4.
    const std::vector<Edge> base{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 7}};
    const Graph g(8, base);
    const BoundResult r = theorem1_set(g, 2, kChecked);
    REQUIRE(r.trace.size() == 1);
    CHECK(r.trace[0].tag == BranchTag::Case1Sub3);
    CHECK(r.trace[0].pivot == 0);
    CHECK(r.trace[0].link == 1);
    CHECK(r.set.members() == std::vector<int>{0, 4});
    check_trace(g, r);

    // A pendant on x breaks the terminal 5-cycle.
    std::vector<Edge> edges = base;
    edges.emplace_back(1, 8);
    const Graph h(9, edges);
    const BoundResult s = theorem1_set(h, 2, kChecked);
    CHECK(s.trace[0].tag == BranchTag::Case1Sub3);
    CHECK(s.trace[0].chosen == std::vector<int>{6});
    CHECK(s.trace.size() > 1);
    CHECK(s.set.count() <= 3);
    check_trace(h, s);
}

TEST_CASE("construction is sound on every small connected graph") {
    std::set<BranchTag> seen;
    for (const Graph& g : {Graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 7}}),
                           Graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 7}, {1, 8}})})
        check_bound(g, 2, &seen);
    for (int n = 1; n <= 6; ++n) {
        ConnectedGraphCursor cursor(n);
        while (auto g = cursor.next()) {
            for (int k = 1; k <= 3; ++k) {
                if (classify_exception(*g, k) != ExceptionKind::None) continue;
                check_bound(*g, k, &seen);
            }
        }
    }
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 7 + static_cast<int>(rng() % 14);
        const double p = 0.02 + 0.4 * static_cast<double>(rng() % 1000) / 1000.0;
        const Graph g = gen_random_connected(n, p, rng());
        for (int k = 1; k <= 4; ++k)
            if (classify_exception(g, k) == ExceptionKind::None) check_bound(g, k, &seen);
    }
    for (BranchTag tag : {BranchTag::BaseSmall, BranchTag::NoClique, BranchTag::DominatingVertex,
                          BranchTag::NoExceptional, BranchTag::Case1Sub1, BranchTag::Case1Sub2,
                          BranchTag::Case1Sub3, BranchTag::Case2}) {
        INFO(std::string(to_string(tag)));
        CHECK(seen.count(tag) == 1);
    }
}

TEST_CASE("construction output is deterministic") {
    const Graph g = gen_random_connected(30, 0.15, 11);
    const BoundResult a = theorem1_set(g, 2);
    const BoundResult b = theorem1_set(g, 2, kChecked);
    CHECK(a.set == b.set);
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
        CHECK(a.trace[i].tag == b.trace[i].tag);
        CHECK(a.trace[i].chosen == b.trace[i].chosen);
    }
}
