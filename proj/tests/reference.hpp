// Brute-force reference implementations used as independent oracles. These
// deliberately avoid the code paths they check: adjacency straight from the
// written rule, girth by edge deletion, and 6-cycle counts by global
// enumeration plus containment.
#pragma once

#include <algorithm>
#include <limits>
#include <set>
#include <vector>

#include "bouwer/cycles.hpp"

namespace ref {

// Two vertices are adjacent iff they can be written as (a,b) and (a+1,c)
// where c = b or c differs from b in exactly one position, there by 2^a.
inline bool adjacent_by_rule(const bouwer::GraphParams& p, const bouwer::Vertex& x,
                             const bouwer::Vertex& y) {
    auto directed = [&](const bouwer::Vertex& lo, const bouwer::Vertex& hi) {
        if ((lo.a + 1) % p.m != hi.a) return false;
        int diffs = 0;
        bool step_ok = true;
        for (int j = 0; j < p.k - 1; ++j) {
            const int bj = lo.b[static_cast<size_t>(j)];
            const int cj = hi.b[static_cast<size_t>(j)];
            if (bj == cj) continue;
            ++diffs;
            if (cj != (bj + p.pow2_at(lo.a)) % p.n) step_ok = false;
        }
        return diffs == 0 || (diffs == 1 && step_ok);
    };
    return directed(x, y) || directed(y, x);
}

// Girth via edge deletion: shortest cycle through edge {u,v} is
// 1 + dist(u,v) in the graph without that edge.
inline int girth_by_edge_deletion(const bouwer::BouwerGraph& g) {
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(g.order());
    for (bouwer::VertexIndex u = 0; u < g.order(); ++u) {
        for (bouwer::VertexIndex v : g.neighbors_of(u)) {
            if (v < u) continue;
            std::fill(dist.begin(), dist.end(), -1);
            std::vector<bouwer::VertexIndex> queue{u};
            dist[u] = 0;
            for (size_t h = 0; h < queue.size() && dist[v] < 0; ++h) {
                const bouwer::VertexIndex x = queue[h];
                if (dist[x] + 1 >= best) break;
                for (bouwer::VertexIndex y : g.neighbors_of(x)) {
                    if ((x == u && y == v) || (x == v && y == u)) continue;  // deleted edge
                    if (dist[y] < 0) {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            if (dist[v] >= 0) best = std::min(best, dist[v] + 1);
        }
    }
    return best;
}

// Every 6-cycle in the graph, canonicalized.
inline std::set<bouwer::Cycle> all_six_cycles(const bouwer::BouwerGraph& g) {
    std::set<bouwer::Cycle> out;
    for (bouwer::VertexIndex v = 0; v < g.order(); ++v)
        for (const bouwer::Cycle& c : enumerate_six_cycles_at(g, v)) out.insert(c);
    return out;
}

inline bool cycle_contains_two_arc(const bouwer::Cycle& c, bouwer::VertexIndex x0,
                                   bouwer::VertexIndex x1, bouwer::VertexIndex x2) {
    const size_t len = c.v.size();
    for (size_t i = 0; i < len; ++i) {
        const bouwer::VertexIndex a = c.v[i], b = c.v[(i + 1) % len], d = c.v[(i + 2) % len];
        if (b != x1) continue;
        if ((a == x0 && d == x2) || (a == x2 && d == x0)) return true;
    }
    return false;
}

// Independent count: global 6-cycle set filtered by containment.
inline int count_six_cycles_by_containment(const std::set<bouwer::Cycle>& cycles,
                                           bouwer::VertexIndex x0, bouwer::VertexIndex x1,
                                           bouwer::VertexIndex x2) {
    int count = 0;
    for (const bouwer::Cycle& c : cycles)
        if (cycle_contains_two_arc(c, x0, x1, x2)) ++count;
    return count;
}

}  // namespace ref
