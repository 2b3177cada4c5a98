#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bouwer/graph.hpp"

namespace bouwer {

// A total map on the vertex set, materialized as a permutation of canonical
// indices. Closed-form rules are expanded at construction so verification
// and composition are uniform.
struct VertexMap {
    std::string name;
    std::vector<VertexIndex> image;

    VertexIndex apply(VertexIndex v) const { return image[v]; }
    bool is_bijection() const;
    bool operator==(const VertexMap& o) const { return image == o.image; }
};

VertexMap identity_map(const GraphParams& p);

// (f*g)(x) = f(g(x)).
VertexMap compose(const VertexMap& f, const VertexMap& g);
VertexMap inverse_map(const VertexMap& f);
VertexMap map_power(const VertexMap& f, int e);

// Builds a map from a per-vertex rule.
template <typename Fn>
VertexMap map_from_rule(const GraphParams& p, std::string name, Fn&& rule) {
    VertexMap m;
    m.name = std::move(name);
    const long long order = p.order();
    m.image.resize(static_cast<size_t>(order));
    for (long long i = 0; i < order; ++i) {
        const Vertex v = vertex_at(p, static_cast<VertexIndex>(i));
        m.image[static_cast<size_t>(i)] = vertex_index(p, rule(v));
    }
    return m;
}

// Cyclic shift of the trailing coordinates: (a,b_1,...,b_{k-1}) ->
// (a,b_2,...,b_{k-1},b_1). Order divides k-1; identity for k = 2.
VertexMap theta(const GraphParams& p);

// (a,b) -> (a+1, 2b); order m.
VertexMap tau(const GraphParams& p);

// Replaces b_1 by 2^a - 1 - (b_1 + ... + b_{k-1}); involution.
VertexMap psi(const GraphParams& p);

// (a,b) -> (a, b + c); automorphism for any shift c.
VertexMap b_translation(const GraphParams& p, const std::vector<int>& c);

// An automorphism carrying v to the zero vertex: the composition of a
// power of tau with a trailing-coordinate translation.
VertexMap transport_to_origin(const GraphParams& p, const Vertex& v);

// True iff map is bijective and preserves adjacency edge by edge.
bool verify_automorphism(const BouwerGraph& g, const VertexMap& map);

// The explicit arc-reversing automorphisms. Each throws
// BouwerError(WrongCase) outside its parameter family and otherwise returns
// a map that swaps the zero vertex with (1,0).
VertexMap reversal_map_n3(const GraphParams& p);     // n = 3 (m even)
VertexMap reversal_map_k2n5(const GraphParams& p);   // k = 2, n = 5, 4 | m
VertexMap reversal_map_b2m7(const GraphParams& p);   // k = 2, n = 7, m in {3,6}
VertexMap reversal_map_b2621(const GraphParams& p);  // (k,m,n) = (2,6,21)

// Picks the reversal map covering p, if any.
std::optional<VertexMap> explicit_reversal_map(const GraphParams& p);

// Orbit of seed under the group generated by the given maps, sorted.
std::vector<VertexIndex> orbit_of(VertexIndex seed, std::span<const VertexMap> generators);

// "i -> j" lines sorted by i.
std::string permutation_string(const VertexMap& m);

namespace detail {
// The 7-row residue table behind reversal_map_b2m7, applied for any m
// divisible by 3. Exposed so tests can check that the table fails to be an
// automorphism outside m in {3,6} instead of assuming it.
VertexMap b2m7_table_map(const GraphParams& p);
}  // namespace detail

}  // namespace bouwer
