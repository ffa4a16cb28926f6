#include <doctest.h>

#include <deque>

#include "symcol/errors.hpp"
#include "symcol/graph.hpp"

using namespace symcol;

namespace {

// Shortest cycle through BFS from every vertex.
int girth(const Graph& g) {
    int best = 1 << 30;
    for (Vertex s = 0; s < g.order(); ++s) {
        std::vector<int> dist(g.order(), -1), parent(g.order(), -1);
        std::deque<Vertex> q{s};
        dist[s] = 0;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop_front();
            for (Vertex w : g.neighbours(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push_back(w);
                } else if (parent[v] != w) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

} // namespace

TEST_CASE("edges are canonical and numbered lexicographically") {
    Graph g(4, {{3, 1}, {0, 2}, {2, 1}});
    REQUIRE(g.size() == 3);
    CHECK(g.edge(0) == Edge(0, 2));
    CHECK(g.edge(1) == Edge(1, 2));
    CHECK(g.edge(2) == Edge(1, 3));
    CHECK(g.edge_id(3, 1) == 2u);
    CHECK_FALSE(g.edge_id(0, 3).has_value());
    CHECK(g.incident_edges(1) == std::vector<EdgeId>{1, 2});
}

TEST_CASE("construction rejects loops, duplicates and out-of-range ends") {
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InputError);
    CHECK_THROWS_AS(Graph(-1, {}), InputError);
}

TEST_CASE("generators") {
    const auto k4 = complete(4);
    CHECK(k4.order() == 4);
    CHECK(k4.size() == 6);
    CHECK(regularity(k4) == 3);

    const auto p = petersen();
    CHECK(p.order() == 10);
    CHECK(p.size() == 15);
    CHECK(regularity(p) == 3);
    CHECK(girth(p) == 5);

    const auto k24 = complete_bipartite(2, 4);
    CHECK(k24.order() == 6);
    CHECK(k24.size() == 8);
    CHECK_FALSE(regularity(k24).has_value());

    CHECK(regularity(cycle(5)) == 2);
    CHECK(path(4).size() == 3);
    CHECK_THROWS_AS(cycle(2), InputError);
    CHECK_THROWS_AS(complete(0), InputError);
}

TEST_CASE("circulant counts the diameter step once") {
    CHECK(regularity(circulant(8, {1, 4})) == 3);
    CHECK(regularity(circulant(14, {1, 2, 3})) == 6);
    CHECK(circulant(6, {1}) == cycle(6));
    CHECK_THROWS_AS(circulant(6, {4}), InputError);
}

TEST_CASE("distances and connectivity") {
    CHECK(distances_from(cycle(6), 0) == std::vector<int>{0, 1, 2, 3, 2, 1});
    const auto two_triangles = cycle(3).disjoint_union(cycle(3));
    CHECK_FALSE(is_connected(two_triangles));
    CHECK(distances_from(two_triangles, 0)[4] == -1);
    const auto d = distances_from(petersen(), 0);
    CHECK(*std::max_element(d.begin(), d.end()) == 2);
    CHECK_THROWS_AS(distances_from(cycle(4), 7), InputError);
}

TEST_CASE("induced, complement, is_complete") {
    const auto p = petersen();
    const std::vector<Vertex> outer{0, 1, 2, 3, 4};
    CHECK(p.induced(outer) == cycle(5));
    CHECK(complete(5).complement().size() == 0);
    CHECK(is_complete(complete(6)));
    CHECK_FALSE(is_complete(cycle(4)));
    CHECK(is_complete(Graph(1, {})));
}

TEST_CASE("random_regular is simple, regular and seed-reproducible") {
    for (std::uint64_t seed : {1u, 2u, 7u}) {
        const auto g = random_regular(12, 3, {.seed = seed});
        CHECK(regularity(g) == 3);
        CHECK(g == random_regular(12, 3, {.seed = seed}));
    }
    CHECK_FALSE(random_regular(12, 3, {.seed = 1}) == random_regular(12, 3, {.seed = 2}));
    CHECK_THROWS_AS(random_regular(5, 3), InputError);
    CHECK_THROWS_AS(random_regular(4, 4), InputError);
    CHECK_THROWS_AS(random_regular(40, 9, {.seed = 0, .max_retries = 1}), BudgetExceeded);
}
