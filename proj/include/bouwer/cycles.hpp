#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bouwer/graph.hpp"

namespace bouwer {

// Walk v_0 ~ v_1 ~ ... ~ v_s in which any three consecutive vertices are
// distinct.
struct SArc {
    std::vector<VertexIndex> v;

    int length() const { return static_cast<int>(v.size()) - 1; }
    bool operator==(const SArc&) const = default;
};

bool is_s_arc(const BouwerGraph& g, std::span<const VertexIndex> walk);

// All s-arcs with first vertex root, in lexicographic vertex order.
std::vector<SArc> enumerate_s_arcs(const BouwerGraph& g, VertexIndex root, int s);

// Length of a shortest cycle. Per-vertex BFS with early exit; girth() picks
// the parallel kernel when OpenMP is available, girth_serial is the
// reference implementation.
int girth(const BouwerGraph& g);
int girth_serial(const BouwerGraph& g);
int girth_parallel(const BouwerGraph& g);

// Number of distinct 6-cycles that contain the 2-arc as a subpath.
// A 6-cycle through x0~x1~x2 is determined by its continuation
// (x3,x4,x5), so the triple enumeration counts each cycle exactly once.
int count_six_cycles_through(const BouwerGraph& g, const SArc& two_arc);

// Cycle stored in canonical form: the rotation of the index sequence (or of
// its reversal) that is lexicographically minimal. Bit-exact dedup key.
struct Cycle {
    std::vector<VertexIndex> v;

    bool operator==(const Cycle&) const = default;
    bool operator<(const Cycle& o) const { return v < o.v; }
};

Cycle canonical_cycle(std::span<const VertexIndex> seq);

// All distinct 6-cycles through base, canonicalized, sorted.
std::vector<Cycle> enumerate_six_cycles_at(const BouwerGraph& g, VertexIndex base);
std::uint64_t count_six_cycles_at(const BouwerGraph& g, VertexIndex base);

// Total number of 6-cycles in the graph (each cycle counted once).
// six_cycle_total() dispatches to the OpenMP kernel when available.
std::uint64_t six_cycle_total(const BouwerGraph& g);
std::uint64_t six_cycle_total_serial(const BouwerGraph& g);
std::uint64_t six_cycle_total_parallel(const BouwerGraph& g);

// Number of distinct 6-cycles through a fixed vertex for generic parameters
// (m > 6, n > 7), summed over the form families: k^3 - k.
long long generic_origin_six_cycle_count(int k);

}  // namespace bouwer
