#pragma once

#include <span>
#include <vector>

#include "bouwer/vertex.hpp"

namespace bouwer {

// The raw images of the 2k neighbor formula slots of vertex idx, in slot
// order: forward (a+1,b), backward (a-1,b), then per coordinate j the
// forward (a+1, b + 2^a e_j) and backward (a-1, b - 2^{a-1} e_j) images.
// Entries may repeat only in the degenerate family (m,n) = (2,3), where the
// forward and backward slots collapse pairwise.
std::vector<VertexIndex> neighbor_slots(const GraphParams& p, VertexIndex idx);

// Distinct neighbors, sorted by canonical index.
std::vector<VertexIndex> neighbor_indices(const GraphParams& p, VertexIndex idx);
std::vector<Vertex> neighbors(const GraphParams& p, const Vertex& v);

// Immutable adjacency over all m*n^{k-1} vertices, stored as a flat array of
// sorted neighbor lists with a uniform stride.
class BouwerGraph {
public:
    // Builds the full adjacency and checks it: symmetric, loop-free, and
    // uniformly regular. Valency is 2k except for the (m,n) = (2,3) family,
    // where the neighbor formula collapses pairwise and the graph is
    // k-regular; such graphs are built with degenerate() set rather than
    // rejected. Any other irregularity throws
    // BouwerError(IntegrityViolation).
    static BouwerGraph build(const GraphParams& p);

    const GraphParams& params() const { return params_; }
    VertexIndex order() const { return order_; }
    int valency() const { return valency_; }
    bool degenerate() const { return degenerate_; }
    long long edge_count() const { return static_cast<long long>(order_) * valency_ / 2; }

    std::span<const VertexIndex> neighbors_of(VertexIndex v) const {
        return {adj_.data() + static_cast<size_t>(v) * static_cast<size_t>(valency_),
                static_cast<size_t>(valency_)};
    }

    bool adjacent(VertexIndex u, VertexIndex v) const {
        for (VertexIndex x : neighbors_of(u))
            if (x == v) return true;
        return false;
    }

private:
    BouwerGraph() = default;

    GraphParams params_;
    VertexIndex order_ = 0;
    int valency_ = 0;
    bool degenerate_ = false;
    std::vector<VertexIndex> adj_;
};

// 2-colorability by BFS over every component; no parity shortcut.
bool is_bipartite(const BouwerGraph& g);

}  // namespace bouwer
