#include <doctest.h>

#include <map>

#include "kiso/generators.hpp"
#include "kiso/isolation.hpp"
#include "support/brute.hpp"

using namespace kiso;

TEST_CASE("extremal parameters") {
    for (int n = 1; n <= 40; ++n)
        for (int k = 1; k <= 6; ++k) {
            const ExtremalParams p = extremal_params(n, k);
            CHECK(p.a * k + p.b == n);
            CHECK(p.a <= p.b);
            CHECK(p.b <= p.a + k);
        }
    CHECK_THROWS_AS(extremal_params(0, 2), InputError);
}

TEST_CASE("extremal family construction") {
    CHECK(build_extremal(2, 3) == build_path(2));

    const Graph b72 = build_extremal(7, 2);
    CHECK(b72.order() == 7);
    CHECK(is_connected(b72));
    // Path 0-1-2, block {3,4} on 0, block {5,6} on 1: 2 + 2 * (1 + 2) edges.
    CHECK(b72.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 5}, {1, 6}, {3, 4}, {5, 6}});
    CHECK(b72.edge_count() == 8);

    // n = 3, k = 2: a = 1, b = 1, one vertex joined to a K2.
    CHECK(build_extremal(3, 2) == build_complete(3));
    CHECK(iota_oracle(build_extremal(3, 2), 2).iota == 1);

    for (int n = 1; n <= 20; ++n)
        for (int k = 1; k <= 5; ++k) {
            const Graph g = build_extremal(n, k);
            CHECK(g.order() == n);
            CHECK(is_connected(g));
        }
}

TEST_CASE("standard graphs") {
    CHECK(build_complete(1).edge_count() == 0);
    CHECK(classify_exception(build_cycle(5), 2) == ExceptionKind::FiveCycleAtK2);
    CHECK(build_path(4).edge_count() == 3);
    CHECK_THROWS_AS(build_cycle(2), InputError);
    CHECK_THROWS_AS(build_path(0), InputError);
}

TEST_CASE("random connected graphs") {
    CHECK(gen_random_connected(1, 0.5, 3) == Graph(1));
    CHECK(gen_random_connected(9, 1.0, 3) == build_complete(9));
    CHECK(gen_random_connected(8, 0.2, 42) == gen_random_connected(8, 0.2, 42));
    CHECK_FALSE(gen_random_connected(8, 0.2, 42) == gen_random_connected(8, 0.2, 43));
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const int n = 1 + static_cast<int>(seed % 40);
        CHECK(is_connected(gen_random_connected(n, 0.01, seed)));
    }
    CHECK_THROWS_AS(gen_random_connected(5, 0.0, 1), InputError);
    CHECK_THROWS_AS(gen_random_connected(5, 1.5, 1), InputError);
}

TEST_CASE("random spanning trees are uniform over labeled trees on 4 vertices") {
    // Cayley: 16 labeled trees on 4 vertices; a tiny p leaves the tree alone.
    std::map<std::vector<Edge>, int> counts;
    const int draws = 16000;
    for (int s = 0; s < draws; ++s) counts[gen_random_connected(4, 1e-12, static_cast<std::uint64_t>(s)).edges()]++;
    CHECK(counts.size() == 16);
    for (const auto& [edges, c] : counts) {
        CHECK(edges.size() == 3);
        CHECK(c > 800);
        CHECK(c < 1200);
    }
}

TEST_CASE("connected labeled enumeration") {
    auto count = [](int n) {
        ConnectedGraphCursor cursor(n);
        std::uint64_t c = 0;
        std::uint64_t last = 0;
        bool first = true;
        while (auto g = cursor.next()) {
            CHECK(is_connected(*g));
            if (!first) CHECK(cursor.mask() > last);
            first = false;
            last = cursor.mask();
            ++c;
        }
        return c;
    };
    CHECK(count(1) == 1);
    CHECK(count(2) == 1);
    CHECK(count(3) == 4);
    CHECK(count(4) == 38);
    // Union-find recount over all labeled graphs.
    for (int n = 1; n <= 6; ++n) CHECK(count(n) == brute::count_connected(n));
    CHECK(count(5) == 728);
    CHECK(count(6) == 26704);
    CHECK_THROWS_AS(ConnectedGraphCursor(9), CapExceeded);
    CHECK_NOTHROW(ConnectedGraphCursor(9, 9));
}
