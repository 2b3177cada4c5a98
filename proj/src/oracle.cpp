#include "bouwer/oracle.hpp"

#include <algorithm>

namespace bouwer {

namespace {

constexpr VertexIndex kUnset = static_cast<VertexIndex>(-1);

struct Searcher {
    const BouwerGraph& g;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;

    std::vector<VertexIndex> img;      // partial map, kUnset where unassigned
    std::vector<bool> used;            // image side
    std::vector<int> mapped_deg;       // per vertex: count of mapped neighbors
    std::vector<VertexIndex> bfs_rank; // tie-break order from the seed edge
    std::vector<VertexIndex> stack;    // assignment order, for unwinding

    explicit Searcher(const BouwerGraph& graph, std::uint64_t b)
        : g(graph), budget(b), img(graph.order(), kUnset), used(graph.order(), false),
          mapped_deg(graph.order(), 0), bfs_rank(graph.order(), 0) {}

    void assign(VertexIndex v, VertexIndex y) {
        img[v] = y;
        used[y] = true;
        for (VertexIndex u : g.neighbors_of(v)) ++mapped_deg[u];
        stack.push_back(v);
    }

    void unassign(VertexIndex v) {
        used[img[v]] = false;
        img[v] = kUnset;
        for (VertexIndex u : g.neighbors_of(v)) --mapped_deg[u];
        stack.pop_back();
    }

    // Unmapped vertex with the most mapped neighbors; ties resolved by BFS
    // rank from the seed edge, then by index.
    VertexIndex pick_next() const {
        VertexIndex best = kUnset;
        int best_deg = -1;
        for (VertexIndex v = 0; v < g.order(); ++v) {
            if (img[v] != kUnset) continue;
            const int d = mapped_deg[v];
            if (d > best_deg ||
                (d == best_deg && best != kUnset &&
                 (bfs_rank[v] < bfs_rank[best] || (bfs_rank[v] == bfs_rank[best] && v < best)))) {
                best = v;
                best_deg = d;
            }
        }
        return best;
    }

    // y is a consistent image for v iff it is unused, every mapped neighbor
    // of v maps into N(y), and every used vertex in N(y) is the image of a
    // neighbor of v. With equal valencies the last condition reduces to a
    // count comparison.
    bool consistent(VertexIndex v, VertexIndex y) const {
        if (used[y]) return false;
        int mapped_nb = 0;
        for (VertexIndex u : g.neighbors_of(v)) {
            if (img[u] == kUnset) continue;
            ++mapped_nb;
            if (!g.adjacent(y, img[u])) return false;
        }
        int used_nb = 0;
        for (VertexIndex x : g.neighbors_of(y))
            if (used[x]) ++used_nb;
        return used_nb == mapped_nb;
    }

    bool search() {
        const VertexIndex v = pick_next();
        if (v == kUnset) return true;  // total map, consistency held throughout
        if (mapped_deg[v] > 0) {
            // candidates come from the image neighborhood of a mapped neighbor
            VertexIndex anchor = kUnset;
            for (VertexIndex u : g.neighbors_of(v))
                if (img[u] != kUnset) {
                    anchor = u;
                    break;
                }
            for (VertexIndex y : g.neighbors_of(img[anchor])) {
                if (!try_candidate(v, y)) return false;  // budget exhausted
                if (done) return true;
            }
        } else {
            for (VertexIndex y = 0; y < g.order(); ++y) {
                if (!try_candidate(v, y)) return false;
                if (done) return true;
            }
        }
        return done;
    }

    bool done = false;

    // Returns false when the budget ran out.
    bool try_candidate(VertexIndex v, VertexIndex y) {
        if (!consistent(v, y)) return true;
        if (++nodes > budget) {
            exhausted = true;
            return false;
        }
        assign(v, y);
        if (search()) {
            done = true;
            return true;
        }
        if (exhausted) return false;
        unassign(v);
        return true;
    }
};

}  // namespace

OracleResult oracle_arc_reversal(const BouwerGraph& g, std::uint64_t budget) {
    const GraphParams& p = g.params();
    const VertexIndex v0 = vertex_index(p, origin_vertex(p));
    Vertex w = origin_vertex(p);
    w.a = 1 % p.m;
    const VertexIndex w0 = vertex_index(p, w);

    Searcher s(g, budget);

    // BFS ranks from the seed edge, used only for deterministic tie-breaks.
    {
        std::vector<VertexIndex> queue{v0, w0};
        std::vector<bool> seen(g.order(), false);
        seen[v0] = seen[w0] = true;
        for (size_t h = 0; h < queue.size(); ++h) {
            s.bfs_rank[queue[h]] = static_cast<VertexIndex>(h);
            for (VertexIndex x : g.neighbors_of(queue[h]))
                if (!seen[x]) {
                    seen[x] = true;
                    queue.push_back(x);
                }
        }
    }

    s.assign(v0, w0);
    if (!s.consistent(w0, v0)) {
        // cannot even swap the seed edge (never happens for these graphs)
        return {OracleResult::Status::NotReversible, std::nullopt, 0};
    }
    s.assign(w0, v0);

    const bool found = s.search();

    OracleResult r;
    r.nodes_explored = s.nodes;
    if (s.exhausted) {
        r.status = OracleResult::Status::BudgetExhausted;
        return r;
    }
    if (found) {
        r.status = OracleResult::Status::Reversible;
        VertexMap m;
        m.name = "oracle-witness";
        m.image = s.img;
        r.witness = std::move(m);
    } else {
        r.status = OracleResult::Status::NotReversible;
    }
    return r;
}

}  // namespace bouwer
