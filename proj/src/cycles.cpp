#include "bouwer/cycles.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bouwer {

bool is_s_arc(const BouwerGraph& g, std::span<const VertexIndex> walk) {
    if (walk.size() < 2) return false;
    for (size_t i = 0; i + 1 < walk.size(); ++i)
        if (!g.adjacent(walk[i], walk[i + 1])) return false;
    for (size_t i = 0; i + 2 < walk.size(); ++i)
        if (walk[i] == walk[i + 2]) return false;
    return true;
}

namespace {

void extend_arcs(const BouwerGraph& g, std::vector<VertexIndex>& walk, int s,
                 std::vector<SArc>& out) {
    if (static_cast<int>(walk.size()) == s + 1) {
        out.push_back(SArc{walk});
        return;
    }
    const VertexIndex last = walk.back();
    const VertexIndex forbidden =
        walk.size() >= 2 ? walk[walk.size() - 2] : std::numeric_limits<VertexIndex>::max();
    for (VertexIndex x : g.neighbors_of(last)) {
        if (x == forbidden) continue;
        walk.push_back(x);
        extend_arcs(g, walk, s, out);
        walk.pop_back();
    }
}

}  // namespace

std::vector<SArc> enumerate_s_arcs(const BouwerGraph& g, VertexIndex root, int s) {
    if (s < 1) throw std::invalid_argument("enumerate_s_arcs: s must be at least 1");
    std::vector<SArc> out;
    std::vector<VertexIndex> walk{root};
    extend_arcs(g, walk, s, out);
    return out;
}

namespace {

// Shortest cycle discoverable from BFS at s: scans non-tree edges between
// visited layers. The minimum over all start vertices is the girth.
int shortest_cycle_from(const BouwerGraph& g, VertexIndex s, int best, std::vector<int>& dist,
                        std::vector<VertexIndex>& parent, std::vector<VertexIndex>& queue) {
    dist[s] = 0;
    parent[s] = s;
    queue.assign(1, s);
    size_t head = 0;
    int local = best;
    while (head < queue.size()) {
        const VertexIndex u = queue[head++];
        if (2 * dist[u] >= local) break;
        for (VertexIndex x : g.neighbors_of(u)) {
            if (x == parent[u]) continue;
            if (dist[x] < 0) {
                dist[x] = dist[u] + 1;
                parent[x] = u;
                queue.push_back(x);
            } else {
                local = std::min(local, dist[u] + dist[x] + 1);
            }
        }
    }
    for (VertexIndex u : queue) dist[u] = -1;
    return local;
}

}  // namespace

int girth_serial(const BouwerGraph& g) {
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(g.order(), -1);
    std::vector<VertexIndex> parent(g.order());
    std::vector<VertexIndex> queue;
    for (VertexIndex s = 0; s < g.order(); ++s) {
        best = shortest_cycle_from(g, s, best, dist, parent, queue);
        if (best == 3) break;
    }
    return best;
}

int girth_parallel(const BouwerGraph& g) {
    std::atomic<int> best{std::numeric_limits<int>::max()};
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<int> dist(g.order(), -1);
        std::vector<VertexIndex> parent(g.order());
        std::vector<VertexIndex> queue;
#pragma omp for schedule(dynamic, 64)
        for (long long s = 0; s < static_cast<long long>(g.order()); ++s) {
            int cap = best.load(std::memory_order_relaxed);
            if (cap == 3) continue;
            int local = shortest_cycle_from(g, static_cast<VertexIndex>(s), cap, dist, parent, queue);
            int cur = best.load(std::memory_order_relaxed);
            while (local < cur && !best.compare_exchange_weak(cur, local)) {
            }
        }
    }
    return best.load();
#else
    return girth_serial(g);
#endif
}

int girth(const BouwerGraph& g) {
#ifdef _OPENMP
    return girth_parallel(g);
#else
    return girth_serial(g);
#endif
}

int count_six_cycles_through(const BouwerGraph& g, const SArc& two_arc) {
    if (two_arc.v.size() != 3 || !is_s_arc(g, two_arc.v))
        throw std::invalid_argument("count_six_cycles_through: not a 2-arc");
    const VertexIndex x0 = two_arc.v[0], x1 = two_arc.v[1], x2 = two_arc.v[2];
    int count = 0;
    for (VertexIndex x3 : g.neighbors_of(x2)) {
        if (x3 == x0 || x3 == x1) continue;
        for (VertexIndex x4 : g.neighbors_of(x3)) {
            if (x4 == x0 || x4 == x1 || x4 == x2) continue;
            for (VertexIndex x5 : g.neighbors_of(x4)) {
                if (x5 == x0 || x5 == x1 || x5 == x2 || x5 == x3) continue;
                if (g.adjacent(x5, x0)) ++count;
            }
        }
    }
    return count;
}

Cycle canonical_cycle(std::span<const VertexIndex> seq) {
    const size_t len = seq.size();
    std::vector<VertexIndex> best(seq.begin(), seq.end());
    std::vector<VertexIndex> cand(len);
    for (int rev = 0; rev < 2; ++rev) {
        for (size_t shift = 0; shift < len; ++shift) {
            for (size_t i = 0; i < len; ++i) {
                const size_t src = rev ? (shift + len - i) % len : (shift + i) % len;
                cand[i] = seq[src];
            }
            if (cand < best) best = cand;
        }
    }
    return Cycle{std::move(best)};
}

namespace {

// Visits each 6-cycle through base exactly once: the two traversals from
// base are disambiguated by requiring x1 < x5.
template <typename Fn>
void for_each_six_cycle_at(const BouwerGraph& g, VertexIndex base, Fn&& fn) {
    for (VertexIndex x1 : g.neighbors_of(base)) {
        for (VertexIndex x2 : g.neighbors_of(x1)) {
            if (x2 == base) continue;
            for (VertexIndex x3 : g.neighbors_of(x2)) {
                if (x3 == base || x3 == x1) continue;
                for (VertexIndex x4 : g.neighbors_of(x3)) {
                    if (x4 == base || x4 == x1 || x4 == x2) continue;
                    for (VertexIndex x5 : g.neighbors_of(x4)) {
                        if (x5 <= x1 || x5 == x2 || x5 == x3) continue;
                        if (g.adjacent(x5, base)) fn(x1, x2, x3, x4, x5);
                    }
                }
            }
        }
    }
}

}  // namespace

std::vector<Cycle> enumerate_six_cycles_at(const BouwerGraph& g, VertexIndex base) {
    std::vector<Cycle> out;
    for_each_six_cycle_at(g, base,
                          [&](VertexIndex x1, VertexIndex x2, VertexIndex x3, VertexIndex x4,
                              VertexIndex x5) {
                              const VertexIndex seq[6] = {base, x1, x2, x3, x4, x5};
                              out.push_back(canonical_cycle(seq));
                          });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::uint64_t count_six_cycles_at(const BouwerGraph& g, VertexIndex base) {
    std::uint64_t count = 0;
    for_each_six_cycle_at(g, base,
                          [&](VertexIndex, VertexIndex, VertexIndex, VertexIndex, VertexIndex) {
                              ++count;
                          });
    return count;
}

std::uint64_t six_cycle_total_serial(const BouwerGraph& g) {
    std::uint64_t total = 0;
    for (VertexIndex v = 0; v < g.order(); ++v) total += count_six_cycles_at(g, v);
    return total / 6;
}

std::uint64_t six_cycle_total_parallel(const BouwerGraph& g) {
#ifdef _OPENMP
    std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 32) reduction(+ : total)
    for (long long v = 0; v < static_cast<long long>(g.order()); ++v)
        total += count_six_cycles_at(g, static_cast<VertexIndex>(v));
    return total / 6;
#else
    return six_cycle_total_serial(g);
#endif
}

std::uint64_t six_cycle_total(const BouwerGraph& g) {
#ifdef _OPENMP
    return six_cycle_total_parallel(g);
#else
    return six_cycle_total_serial(g);
#endif
}

long long generic_origin_six_cycle_count(int k) {
    return static_cast<long long>(k) * k * k - k;
}

}  // namespace bouwer
