#include "bouwer/graph.hpp"

#include <random>

#include "bouwer/symmetry.hpp"
#include "doctest.h"
#include "reference.hpp"

using namespace bouwer;

namespace {

const std::vector<std::tuple<int, int, int>> kSample = {
    {2, 6, 9}, {2, 3, 7}, {2, 4, 5}, {3, 6, 9}, {3, 4, 5}, {2, 10, 11}, {4, 2, 3}, {2, 2, 3},
};

}  // namespace

TEST_CASE("canonical index round-trips") {
    for (const auto& [k, m, n] : kSample) {
        const GraphParams p = validate_params(k, m, n);
        for (VertexIndex i = 0; i < p.order(); ++i)
            CHECK(vertex_index(p, vertex_at(p, i)) == i);
    }
}

TEST_CASE("neighbors of the zero vertex in B(2,6,9)") {
    const GraphParams p = validate_params(2, 6, 9);
    const std::vector<Vertex> nb = neighbors(p, origin_vertex(p));
    // (1,0), (5,0), (1,1), (5,4): -2^{-1} = -5 = 4 mod 9
    REQUIRE(nb.size() == 4);
    std::vector<Vertex> expect = {
        make_vertex(p, 1, {0}), make_vertex(p, 5, {0}), make_vertex(p, 1, {1}),
        make_vertex(p, 5, {4})};
    std::sort(expect.begin(), expect.end(), [&](const Vertex& a, const Vertex& b) {
        return vertex_index(p, a) < vertex_index(p, b);
    });
    CHECK(nb == expect);
}

TEST_CASE("adjacency agrees with the written rule") {
    for (const auto& [k, m, n] : kSample) {
        const GraphParams p = validate_params(k, m, n);
        if (p.order() > 200) continue;
        const BouwerGraph g = BouwerGraph::build(p);
        for (VertexIndex u = 0; u < g.order(); ++u) {
            const Vertex vu = vertex_at(p, u);
            for (VertexIndex v = 0; v < g.order(); ++v)
                CHECK(g.adjacent(u, v) == ref::adjacent_by_rule(p, vu, vertex_at(p, v)));
        }
    }
}

TEST_CASE("graphs are regular, symmetric and loop-free") {
    for (const auto& [k, m, n] : kSample) {
        const GraphParams p = validate_params(k, m, n);
        const BouwerGraph g = BouwerGraph::build(p);
        CHECK(g.order() == p.order());
        const int expected_valency = (m == 2 && n == 3) ? k : 2 * k;
        CHECK(g.valency() == expected_valency);
        CHECK(g.degenerate() == (m == 2 && n == 3));
        for (VertexIndex v = 0; v < g.order(); ++v) {
            const auto nb = g.neighbors_of(v);
            CHECK(std::is_sorted(nb.begin(), nb.end()));
            for (VertexIndex u : nb) {
                CHECK(u != v);
                CHECK(g.adjacent(u, v));
            }
        }
    }
}

TEST_CASE("orders and edge counts") {
    const BouwerGraph g269 = BouwerGraph::build(validate_params(2, 6, 9));
    CHECK(g269.order() == 54);
    CHECK(g269.edge_count() == 108);
    const BouwerGraph g369 = BouwerGraph::build(validate_params(3, 6, 9));
    CHECK(g369.order() == 486);
    CHECK(g369.valency() == 6);
}

TEST_CASE("the (m,n)=(2,3) family collapses to valency k") {
    // a+1 = a-1 mod 2 and 2^a + 2^{a-1} = 0 mod 3, so the slot images pair up
    const GraphParams p = validate_params(2, 2, 3);
    const std::vector<VertexIndex> slots = neighbor_slots(p, 0);
    CHECK(slots.size() == 4);
    const std::vector<VertexIndex> distinct = neighbor_indices(p, 0);
    CHECK(distinct.size() == 2);
    const BouwerGraph g = BouwerGraph::build(p);
    CHECK(g.degenerate());
    CHECK(g.valency() == 2);
    CHECK(g.order() == 6);
    // the whole graph is a hexagon
    CHECK(ref::girth_by_edge_deletion(g) == 6);
}

TEST_CASE("non-degenerate parameters keep all 2k slots distinct") {
    for (const auto& [k, m, n] : kSample) {
        if (m == 2) continue;
        const GraphParams p = validate_params(k, m, n);
        for (VertexIndex v = 0; v < std::min<long long>(p.order(), 64); ++v) {
            std::vector<VertexIndex> slots = neighbor_slots(p, v);
            std::sort(slots.begin(), slots.end());
            CHECK(std::adjacent_find(slots.begin(), slots.end()) == slots.end());
        }
    }
}

TEST_CASE("bipartite exactly when m is even") {
    for (const auto& [k, m, n] : kSample) {
        const BouwerGraph g = BouwerGraph::build(validate_params(k, m, n));
        CHECK(is_bipartite(g) == (m % 2 == 0));
    }
}

TEST_CASE("transport_to_origin carries v to the zero vertex") {
    const GraphParams p = validate_params(2, 6, 9);
    const BouwerGraph g = BouwerGraph::build(p);
    const VertexIndex o = vertex_index(p, origin_vertex(p));

    CHECK(transport_to_origin(p, origin_vertex(p)).image ==
          identity_map(p).image);

    const VertexMap t1 = transport_to_origin(p, make_vertex(p, 1, {0}));
    CHECK(t1.apply(vertex_index(p, make_vertex(p, 1, {0}))) == o);
    CHECK(verify_automorphism(g, t1));

    std::mt19937 rng(20240613);
    std::uniform_int_distribution<VertexIndex> pick(0, g.order() - 1);
    for (int trial = 0; trial < 50; ++trial) {
        const VertexIndex v = pick(rng);
        const VertexMap t = transport_to_origin(p, vertex_at(p, v));
        CHECK(t.apply(v) == o);
        CHECK(verify_automorphism(g, t));
    }
}
