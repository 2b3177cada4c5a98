#include "bouwer/cycles.hpp"

#include "doctest.h"
#include "reference.hpp"

using namespace bouwer;

namespace {

BouwerGraph make(int k, int m, int n) { return BouwerGraph::build(validate_params(k, m, n)); }

VertexIndex origin(const BouwerGraph& g) {
    return vertex_index(g.params(), origin_vertex(g.params()));
}

SArc two_arc(const BouwerGraph& g, const Vertex& v1, const Vertex& v2) {
    const GraphParams& p = g.params();
    return SArc{{origin(g), vertex_index(p, v1), vertex_index(p, v2)}};
}

}  // namespace

TEST_CASE("s-arc counts: 2k for s=1, 2k(2k-1)^2 for s=3") {
    for (const auto& [k, m, n] : std::vector<std::tuple<int, int, int>>{
             {2, 10, 11}, {3, 6, 9}, {2, 6, 9}, {4, 2, 3}}) {
        const BouwerGraph g = make(k, m, n);
        const int val = g.valency();
        CHECK(enumerate_s_arcs(g, origin(g), 1).size() == static_cast<size_t>(val));
        const auto arcs3 = enumerate_s_arcs(g, origin(g), 3);
        CHECK(arcs3.size() ==
              static_cast<size_t>(val) * (val - 1) * (val - 1));
        for (const SArc& a : arcs3) CHECK(is_s_arc(g, a.v));
    }
    // the two named counts
    CHECK(enumerate_s_arcs(make(2, 10, 11), 0, 3).size() == 36);
    const BouwerGraph g369 = make(3, 6, 9);
    CHECK(enumerate_s_arcs(g369, origin(g369), 3).size() == 150);
}

TEST_CASE("girth fixtures") {
    CHECK(girth(make(2, 10, 11)) == 6);
    CHECK(girth(make(2, 4, 15)) == 4);
    CHECK(girth(make(2, 5, 31)) == 5);
    CHECK(girth(make(2, 3, 7)) == 3);  // the leading-coordinate cycle closes in m steps
    CHECK(girth(make(2, 6, 9)) == 6);
    CHECK(girth(make(2, 2, 3)) == 6);  // hexagon
}

TEST_CASE("girth agrees with edge-deletion brute force") {
    for (const auto& [k, m, n] : std::vector<std::tuple<int, int, int>>{
             {2, 6, 9}, {2, 3, 7}, {2, 4, 5}, {2, 10, 11}, {3, 4, 5}, {3, 2, 3}, {2, 4, 15}}) {
        const BouwerGraph g = make(k, m, n);
        CHECK(girth_serial(g) == ref::girth_by_edge_deletion(g));
        CHECK(girth_parallel(g) == girth_serial(g));
    }
}

TEST_CASE("six-cycle counts through the named 2-arcs of B(2,10,11)") {
    const BouwerGraph g = make(2, 10, 11);
    const GraphParams& p = g.params();
    // (1,0)->(2,0): none
    CHECK(count_six_cycles_through(g, two_arc(g, make_vertex(p, 1, {0}), make_vertex(p, 2, {0}))) ==
          0);
    // (1,0)->(2,2e_1): exactly one
    CHECK(count_six_cycles_through(g, two_arc(g, make_vertex(p, 1, {0}), make_vertex(p, 2, {2}))) ==
          1);
    // (1,e_1)->(0,e_1): k
    CHECK(count_six_cycles_through(g, two_arc(g, make_vertex(p, 1, {1}), make_vertex(p, 0, {1}))) ==
          2);
}

TEST_CASE("six-cycle counting agrees with global enumeration") {
    for (const auto& [k, m, n] :
         std::vector<std::tuple<int, int, int>>{{2, 6, 9}, {2, 3, 7}, {3, 4, 5}, {2, 4, 15}}) {
        const BouwerGraph g = make(k, m, n);
        const auto cycles = ref::all_six_cycles(g);
        for (const SArc& arc : enumerate_s_arcs(g, origin(g), 2)) {
            CHECK(count_six_cycles_through(g, arc) ==
                  ref::count_six_cycles_by_containment(cycles, arc.v[0], arc.v[1], arc.v[2]));
        }
    }
}

TEST_CASE("every 2-arc of B(2,6,9) lies in k or k+1 six-cycles") {
    const BouwerGraph g = make(2, 6, 9);
    for (const SArc& arc : enumerate_s_arcs(g, origin(g), 2)) {
        const int c = count_six_cycles_through(g, arc);
        CHECK((c == 2 || c == 3));
    }
}

TEST_CASE("canonical cycle form is rotation and reversal invariant") {
    const std::vector<VertexIndex> seq = {5, 9, 2, 17, 4, 11};
    const Cycle base = canonical_cycle(seq);
    for (size_t shift = 0; shift < 6; ++shift) {
        std::vector<VertexIndex> rot(6), rev(6);
        for (size_t i = 0; i < 6; ++i) rot[i] = seq[(i + shift) % 6];
        for (size_t i = 0; i < 6; ++i) rev[i] = rot[5 - i];
        CHECK(canonical_cycle(rot) == base);
        CHECK(canonical_cycle(rev) == base);
    }
    CHECK(base.v[0] == 2);  // starts at the smallest label
}

TEST_CASE("the girth-lemma cycle shows up in enumeration") {
    const BouwerGraph g = make(2, 10, 11);
    const GraphParams& p = g.params();
    const std::vector<VertexIndex> want = {
        vertex_index(p, origin_vertex(p)),     vertex_index(p, make_vertex(p, 1, {0})),
        vertex_index(p, make_vertex(p, 2, {2})), vertex_index(p, make_vertex(p, 1, {2})),
        vertex_index(p, make_vertex(p, 0, {1})), vertex_index(p, make_vertex(p, 1, {1}))};
    const Cycle target = canonical_cycle(want);
    const auto cycles = enumerate_six_cycles_at(g, origin(g));
    CHECK(std::find(cycles.begin(), cycles.end(), target) != cycles.end());
}

TEST_CASE("enumeration at the origin is consistent with per-2-arc counts") {
    for (const auto& [k, m, n] :
         std::vector<std::tuple<int, int, int>>{{2, 6, 9}, {3, 6, 9}, {2, 10, 11}}) {
        const BouwerGraph g = make(k, m, n);
        const auto cycles = enumerate_six_cycles_at(g, origin(g));
        for (const SArc& arc : enumerate_s_arcs(g, origin(g), 2)) {
            int in_cycles = 0;
            for (const Cycle& c : cycles)
                if (ref::cycle_contains_two_arc(c, arc.v[0], arc.v[1], arc.v[2])) ++in_cycles;
            CHECK(in_cycles == count_six_cycles_through(g, arc));
        }
    }
}

TEST_CASE("origin six-cycle total matches the closed form for generic parameters") {
    CHECK(generic_origin_six_cycle_count(2) == 6);
    CHECK(generic_origin_six_cycle_count(3) == 24);
    CHECK(generic_origin_six_cycle_count(4) == 60);
    const BouwerGraph g2 = make(2, 10, 11);
    CHECK(enumerate_six_cycles_at(g2, origin(g2)).size() == 6);
    const BouwerGraph g3 = make(3, 10, 11);
    CHECK(enumerate_six_cycles_at(g3, origin(g3)).size() == 24);
    const BouwerGraph g4 = make(4, 10, 11);
    CHECK(enumerate_six_cycles_at(g4, origin(g4)).size() == 60);
}

TEST_CASE("six_cycle_total: serial equals parallel and matches vertex-transitivity") {
    for (const auto& [k, m, n] :
         std::vector<std::tuple<int, int, int>>{{2, 6, 9}, {2, 10, 11}, {3, 6, 9}}) {
        const BouwerGraph g = make(k, m, n);
        const std::uint64_t serial = six_cycle_total_serial(g);
        CHECK(serial == six_cycle_total_parallel(g));
        // every vertex lies on the same number of 6-cycles
        CHECK(serial == count_six_cycles_at(g, 0) * g.order() / 6);
        CHECK(serial == ref::all_six_cycles(g).size());
    }
}

TEST_CASE("count and enumerate agree at every vertex of a small graph") {
    const BouwerGraph g = make(2, 4, 5);
    for (VertexIndex v = 0; v < g.order(); ++v)
        CHECK(count_six_cycles_at(g, v) == enumerate_six_cycles_at(g, v).size());
}
