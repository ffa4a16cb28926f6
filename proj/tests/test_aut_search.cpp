#include <doctest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "symcol/aut_search.hpp"
#include "symcol/errors.hpp"

using namespace symcol;

namespace {

VertexSet all_vertices(const Graph& g) {
    VertexSet out(g.order());
    for (Vertex v = 0; v < g.order(); ++v) out[v] = v;
    return out;
}

EdgeSet all_edges(const Graph& g) {
    EdgeSet out(g.size());
    for (EdgeId e = 0; e < g.size(); ++e) out[e] = e;
    return out;
}

Graph spider_123() { return Graph(7, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}}); }

std::vector<std::size_t> sizes(const std::vector<VertexSet>& orbits) {
    std::vector<std::size_t> out;
    for (const auto& o : orbits) out.push_back(o.size());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("witnesses for the basic queries") {
    AutConstraint any;
    any.nontrivial_on = all_vertices(complete(3));
    auto w = find_automorphism(complete(3), any);
    REQUIRE(w);
    CHECK_FALSE(w->is_identity());

    AutConstraint k2;
    k2.colour_preserve = EdgeColouring(1, Colour::Blue);
    k2.nontrivial_on = VertexSet{0, 1};
    w = find_automorphism(complete(2), k2);
    REQUIRE(w);
    CHECK(w->images() == std::vector<Vertex>{1, 0});

    AutConstraint tree;
    tree.nontrivial_on = all_vertices(spider_123());
    CHECK_FALSE(find_automorphism(spider_123(), tree));
    CHECK(oracle::automorphisms(spider_123()).size() == 1);
}

TEST_CASE("stabilisers and orbits") {
    const auto p = petersen();
    const auto gens = stabiliser_generators(p, 0);
    for (const auto& g : gens) CHECK(g(0) == 0);
    AutConstraint fix0;
    fix0.pointwise_fixed = {0};
    CHECK(subgroup_chain(p, fix0).order() == 12);
    CHECK(sizes(vertex_orbits(p, gens, all_vertices(p))) == std::vector<std::size_t>{1, 3, 6});

    CHECK(subgroup_chain(complete(5), fix0).order() == 24);
    CHECK(subgroup_chain(cycle(6), fix0).order() == 2);
    CHECK(sizes(vertex_orbits(complete(4), stabiliser_generators(complete(4), 0), all_vertices(complete(4)))) ==
          std::vector<std::size_t>{1, 3});
    CHECK(vertex_orbits(cycle(5), {}, all_vertices(cycle(5))).size() == 5);

    const auto c6 = cycle(6);
    CHECK(edge_orbits(c6, subgroup_chain(c6, {}).generators, all_edges(c6)).size() == 1);
    const auto star = complete_bipartite(1, 4);
    auto star_orbits = edge_orbits(star, stabiliser_generators(star, 0), all_edges(star));
    REQUIRE(star_orbits.size() == 1);
    CHECK(star_orbits[0].size() == 4);
    const auto at0 = p.incident_edges(0);
    auto p_orbits = edge_orbits(p, gens, EdgeSet(at0.begin(), at0.end()));
    REQUIRE(p_orbits.size() == 1);
    CHECK(p_orbits[0].size() == 3);
}

TEST_CASE("orbits reject generators leaving the domain") {
    const auto c = cycle(5);
    const auto gens = subgroup_chain(c, {}).generators;
    CHECK_THROWS_AS(vertex_orbits(c, gens, VertexSet{0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(edge_orbits(c, gens, EdgeSet{0}), std::invalid_argument);
}

TEST_CASE("group orders") {
    CHECK(group_order(complete(5)) == 120);
    CHECK(group_order(cycle(7)) == 14);
    CHECK(group_order(petersen()) == 120);
    CHECK(group_order(complete_bipartite(3, 3)) == 72);
    CHECK(group_order(complete(12)) == 479001600ull);
    CHECK_THROWS_AS(group_order(cycle(17)), InputError);
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : oracle::all_graphs(n)) CHECK(group_order(g) == oracle::automorphisms(g).size());
}

TEST_CASE("validation") {
    const auto c = cycle(4);
    AutConstraint bad;
    bad.pinned = {{0, 1}, {2, 1}};
    CHECK_THROWS_AS(validate(c, bad), std::invalid_argument);
    bad = {};
    bad.setwise_pairs = {{{0, 1}, {2}}};
    CHECK_THROWS_AS(validate(c, bad), std::invalid_argument);
    bad = {};
    bad.pointwise_fixed = {9};
    CHECK_THROWS_AS(validate(c, bad), std::invalid_argument);
    bad = {};
    bad.colour_preserve = EdgeColouring(3);
    CHECK_THROWS_AS(validate(c, bad), std::invalid_argument);
    AutConstraint not_stab;
    not_stab.pinned = {{0, 1}};
    CHECK_THROWS_AS(subgroup_chain(c, not_stab), std::invalid_argument);
}

TEST_CASE("subgroup chains match brute-force counts") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 5);
        const auto graphs = oracle::all_graphs(n);
        const auto& g = graphs[rng() % graphs.size()];
        AutConstraint c;
        if (rng() % 2) c.pointwise_fixed = {static_cast<Vertex>(rng() % n)};
        if (rng() % 2 && g.size() > 0) {
            EdgeColouring col(g.size());
            for (EdgeId e = 0; e < g.size(); ++e)
                if (rng() % 3) col.set(e, static_cast<Colour>(rng() % 2));
            c.colour_preserve = col;
        }
        if (rng() % 2) {
            VertexSet a;
            for (Vertex v = 0; v < n; ++v)
                if (rng() % 2) a.push_back(v);
            c.setwise_pairs.emplace_back(a, a);
        }
        const auto chain = subgroup_chain(g, c);
        CHECK(chain.order() == oracle::count(g, c));
        for (const auto& p : chain.generators) CHECK(satisfies(g, c, p));
    }
}

TEST_CASE("isomorphism") {
    const Graph a = cycle(6);
    const Graph b(6, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 5}, {5, 0}});
    const auto iso = find_isomorphism(a, b);
    REQUIRE(iso);
    for (const auto& e : a.edges()) CHECK(b.adjacent((*iso)(e.u), (*iso)(e.v)));
    CHECK_FALSE(are_isomorphic(cycle(6), cycle(3).disjoint_union(cycle(3))));
    CHECK_FALSE(are_isomorphic(cycle(5), cycle(6)));

    // Kneser graph on the 2-subsets of {0..4}
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < 5; ++x)
        for (int y = x + 1; y < 5; ++y) pairs.emplace_back(x, y);
    std::vector<Edge> edges;
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            const auto [a1, b1] = pairs[i];
            const auto [a2, b2] = pairs[j];
            if (a1 != a2 && a1 != b2 && b1 != a2 && b1 != b2) edges.emplace_back(i, j);
        }
    CHECK(are_isomorphic(petersen(), Graph(10, edges)));
}
