#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bouwer/params.hpp"

namespace bouwer {

using VertexIndex = std::uint32_t;

// A vertex (a; b_1,...,b_{k-1}) with a mod m and each b entry mod n.
// The b entries are stored 0-indexed.
struct Vertex {
    int a = 0;
    std::vector<int> b;

    bool operator==(const Vertex&) const = default;
};

// Mixed-radix canonical index: a is the most significant digit,
// then the b entries with increasing weight n^i.
// Bijection onto {0, ..., m*n^{k-1} - 1}.
VertexIndex vertex_index(const GraphParams& p, const Vertex& v);
Vertex vertex_at(const GraphParams& p, VertexIndex idx);

Vertex origin_vertex(const GraphParams& p);

// (a; c*e_{j}) with the single nonzero entry c at 0-indexed slot j; c is
// reduced mod n, a mod m. Convenience for tests and fixtures.
Vertex axis_vertex(const GraphParams& p, int a, int j, long long c);

// Normalizes arbitrary integer coordinates into range.
Vertex make_vertex(const GraphParams& p, long long a, const std::vector<long long>& b);

// "(a; b_1,b_2,...)" — the fixed label format.
std::string format_vertex(const Vertex& v);

}  // namespace bouwer
