#include "bouwer/graph.hpp"

#include <algorithm>
#include <limits>

namespace bouwer {

std::vector<VertexIndex> neighbor_slots(const GraphParams& p, VertexIndex idx) {
    const Vertex v = vertex_at(p, idx);
    const int up = (v.a + 1) % p.m;
    const int down = (v.a + p.m - 1) % p.m;
    const int step_up = p.pow2_at(v.a);        // 2^a mod n
    const int step_down = p.pow2_at(v.a - 1);  // 2^{a-1} mod n

    std::vector<VertexIndex> out;
    out.reserve(static_cast<size_t>(2 * p.k));
    Vertex w = v;

    w.a = up;
    out.push_back(vertex_index(p, w));
    w.a = down;
    out.push_back(vertex_index(p, w));
    for (int j = 0; j < p.k - 1; ++j) {
        const int bj = v.b[static_cast<size_t>(j)];
        w.a = up;
        w.b[static_cast<size_t>(j)] = (bj + step_up) % p.n;
        out.push_back(vertex_index(p, w));
        w.a = down;
        w.b[static_cast<size_t>(j)] = (bj + p.n - step_down) % p.n;
        out.push_back(vertex_index(p, w));
        w.b[static_cast<size_t>(j)] = bj;
    }
    return out;
}

std::vector<VertexIndex> neighbor_indices(const GraphParams& p, VertexIndex idx) {
    std::vector<VertexIndex> out = neighbor_slots(p, idx);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Vertex> neighbors(const GraphParams& p, const Vertex& v) {
    std::vector<Vertex> out;
    for (VertexIndex u : neighbor_indices(p, vertex_index(p, v))) out.push_back(vertex_at(p, u));
    return out;
}

BouwerGraph BouwerGraph::build(const GraphParams& p) {
    const long long order = p.order();
    if (order > std::numeric_limits<VertexIndex>::max() / 2)
        throw std::length_error("graph order " + std::to_string(order) + " too large");

    BouwerGraph g;
    g.params_ = p;
    g.order_ = static_cast<VertexIndex>(order);

    // First vertex fixes the expected uniform valency.
    const size_t deg0 = neighbor_indices(p, 0).size();
    const bool collapsed = deg0 == static_cast<size_t>(p.k);
    if (deg0 != static_cast<size_t>(2 * p.k) && !collapsed)
        throw BouwerError(ErrorCode::IntegrityViolation,
                          "unexpected valency " + std::to_string(deg0) + " at vertex 0");
    if (collapsed && !(p.m == 2 && p.n == 3))
        throw BouwerError(ErrorCode::IntegrityViolation,
                          "neighbor collapse outside the (m,n)=(2,3) family");
    g.valency_ = static_cast<int>(deg0);
    g.degenerate_ = collapsed;

    g.adj_.resize(static_cast<size_t>(order) * static_cast<size_t>(g.valency_));
    for (VertexIndex v = 0; v < g.order_; ++v) {
        std::vector<VertexIndex> nb = neighbor_indices(p, v);
        if (nb.size() != static_cast<size_t>(g.valency_))
            throw BouwerError(ErrorCode::IntegrityViolation,
                              "valency not uniform at vertex " + std::to_string(v));
        for (VertexIndex u : nb)
            if (u == v)
                throw BouwerError(ErrorCode::IntegrityViolation,
                                  "self loop at vertex " + std::to_string(v));
        std::copy(nb.begin(), nb.end(),
                  g.adj_.begin() + static_cast<long long>(v) * g.valency_);
    }

    for (VertexIndex v = 0; v < g.order_; ++v)
        for (VertexIndex u : g.neighbors_of(v))
            if (!g.adjacent(u, v))
                throw BouwerError(ErrorCode::IntegrityViolation,
                                  "asymmetric adjacency between " + std::to_string(v) + " and " +
                                      std::to_string(u));
    return g;
}

bool is_bipartite(const BouwerGraph& g) {
    std::vector<signed char> color(g.order(), -1);
    std::vector<VertexIndex> queue;
    for (VertexIndex s = 0; s < g.order(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        queue.assign(1, s);
        for (size_t h = 0; h < queue.size(); ++h) {
            const VertexIndex u = queue[h];
            for (VertexIndex x : g.neighbors_of(u)) {
                if (color[x] == -1) {
                    color[x] = static_cast<signed char>(1 - color[u]);
                    queue.push_back(x);
                } else if (color[x] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace bouwer
