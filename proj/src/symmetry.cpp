#include "bouwer/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace bouwer {

bool VertexMap::is_bijection() const {
    std::vector<bool> seen(image.size(), false);
    for (VertexIndex y : image) {
        if (y >= image.size() || seen[y]) return false;
        seen[y] = true;
    }
    return true;
}

VertexMap identity_map(const GraphParams& p) {
    VertexMap m;
    m.name = "id";
    m.image.resize(static_cast<size_t>(p.order()));
    std::iota(m.image.begin(), m.image.end(), 0u);
    return m;
}

VertexMap compose(const VertexMap& f, const VertexMap& g) {
    VertexMap m;
    m.name = f.name + "*" + g.name;
    m.image.resize(g.image.size());
    for (size_t i = 0; i < g.image.size(); ++i) m.image[i] = f.image[g.image[i]];
    return m;
}

VertexMap inverse_map(const VertexMap& f) {
    VertexMap m;
    m.name = f.name + "^-1";
    m.image.resize(f.image.size());
    for (size_t i = 0; i < f.image.size(); ++i) m.image[f.image[i]] = static_cast<VertexIndex>(i);
    return m;
}

VertexMap map_power(const VertexMap& f, int e) {
    VertexMap base = e < 0 ? inverse_map(f) : f;
    int reps = e < 0 ? -e : e;
    VertexMap acc;
    acc.name = f.name + "^" + std::to_string(e);
    acc.image.resize(f.image.size());
    std::iota(acc.image.begin(), acc.image.end(), 0u);
    for (int i = 0; i < reps; ++i) acc = compose(base, acc);
    acc.name = f.name + "^" + std::to_string(e);
    return acc;
}

VertexMap theta(const GraphParams& p) {
    return map_from_rule(p, "theta", [&](const Vertex& v) {
        Vertex w = v;
        std::rotate(w.b.begin(), w.b.begin() + 1, w.b.end());
        return w;
    });
}

VertexMap tau(const GraphParams& p) {
    return map_from_rule(p, "tau", [&](const Vertex& v) {
        Vertex w = v;
        w.a = (v.a + 1) % p.m;
        for (int& x : w.b) x = 2 * x % p.n;
        return w;
    });
}

VertexMap psi(const GraphParams& p) {
    return map_from_rule(p, "psi", [&](const Vertex& v) {
        Vertex w = v;
        long long sum = 0;
        for (int x : v.b) sum += x;
        long long nb = p.pow2_at(v.a) - 1 - sum;
        nb %= p.n;
        if (nb < 0) nb += p.n;
        w.b[0] = static_cast<int>(nb);
        return w;
    });
}

VertexMap b_translation(const GraphParams& p, const std::vector<int>& c) {
    return map_from_rule(p, "shift", [&](const Vertex& v) {
        Vertex w = v;
        for (size_t i = 0; i < w.b.size(); ++i)
            w.b[i] = (w.b[i] + c[i] % p.n + p.n) % p.n;
        return w;
    });
}

VertexMap transport_to_origin(const GraphParams& p, const Vertex& v) {
    // tau^{-a} sends (a,b) to (0, 2^{-a} b); translating by its negation
    // lands on the zero vertex.
    VertexMap t = map_power(tau(p), -v.a);
    const int scale = p.pow2_at(-v.a);
    std::vector<int> shift(static_cast<size_t>(p.k - 1));
    for (int i = 0; i < p.k - 1; ++i) {
        const long long moved = static_cast<long long>(v.b[static_cast<size_t>(i)]) * scale % p.n;
        shift[static_cast<size_t>(i)] = static_cast<int>((p.n - moved) % p.n);
    }
    VertexMap m = compose(b_translation(p, shift), t);
    m.name = "transport" + format_vertex(v);
    return m;
}

bool verify_automorphism(const BouwerGraph& g, const VertexMap& map) {
    if (map.image.size() != g.order() || !map.is_bijection()) return false;
    for (VertexIndex v = 0; v < g.order(); ++v)
        for (VertexIndex u : g.neighbors_of(v))
            if (!g.adjacent(map.apply(v), map.apply(u))) return false;
    return true;
}

VertexMap reversal_map_n3(const GraphParams& p) {
    if (p.n != 3 || p.m % 2 != 0)
        throw BouwerError(ErrorCode::WrongCase, "reversal_map_n3 needs n=3 and even m");
    return map_from_rule(p, "n3", [&](const Vertex& v) {
        Vertex w = v;
        w.a = ((1 - v.a) % p.m + p.m) % p.m;
        for (int& x : w.b) x = (p.n - x) % p.n;
        return w;
    });
}

VertexMap reversal_map_k2n5(const GraphParams& p) {
    if (p.k != 2 || p.n != 5 || p.m % 4 != 0)
        throw BouwerError(ErrorCode::WrongCase, "reversal_map_k2n5 needs k=2, n=5, 4|m");
    return map_from_rule(p, "k2n5", [&](const Vertex& v) {
        Vertex w = v;
        w.a = ((1 - v.a) % p.m + p.m) % p.m;
        const int res = v.a % 4;
        if (res == 0 || res == 1)
            w.b[0] = (p.n - v.b[0]) % p.n;
        else
            w.b[0] = ((2 - v.b[0]) % p.n + p.n) % p.n;
        return w;
    });
}

namespace detail {

VertexMap b2m7_table_map(const GraphParams& p) {
    // row per trailing residue: target residue and the a-rule
    // (0: a -> 1-a, 1: a -> a+1, 2: a -> a-1, 3: a -> -a, 4: a -> a+3, 5: a -> 5-a)
    static constexpr int target[7] = {0, 2, 1, 6, 4, 5, 3};
    static constexpr int arule[7] = {0, 1, 2, 3, 4, 0, 0};
    return map_from_rule(p, "b2m7", [&](const Vertex& v) {
        Vertex w = v;
        const int b = v.b[0];
        w.b[0] = target[b];
        int a = 0;
        switch (arule[b]) {
            case 0: a = 1 - v.a; break;
            case 1: a = v.a + 1; break;
            case 2: a = v.a - 1; break;
            case 3: a = -v.a; break;
            case 4: a = v.a + 3; break;
        }
        w.a = (a % p.m + p.m) % p.m;
        return w;
    });
}

}  // namespace detail

VertexMap reversal_map_b2m7(const GraphParams& p) {
    if (p.k != 2 || p.n != 7 || (p.m != 3 && p.m != 6))
        throw BouwerError(ErrorCode::WrongCase, "reversal_map_b2m7 needs k=2, n=7, m in {3,6}");
    return detail::b2m7_table_map(p);
}

VertexMap reversal_map_b2621(const GraphParams& p) {
    if (p.k != 2 || p.m != 6 || p.n != 21)
        throw BouwerError(ErrorCode::WrongCase, "reversal_map_b2621 needs (k,m,n)=(2,6,21)");
    // row per trailing residue: target residue and the a-rule
    // (0: a -> 1-a, 1: a -> a+1, 2: a -> a-1, 3: a -> 5-a, 4: a -> a+3)
    static constexpr int target[21] = {0, 2,  1, 6,  11, 19, 3, 14, 16, 15, 20,
                                       4, 12, 17, 7, 9,  8,  13, 18, 5,  10};
    static constexpr int arule[21] = {0, 1, 2, 3, 4, 3, 3, 0, 1, 2, 3, 4, 3, 3, 0, 1, 2, 3, 4, 3, 3};
    return map_from_rule(p, "b2621", [&](const Vertex& v) {
        Vertex w = v;
        const int b = v.b[0];
        w.b[0] = target[b];
        int a = 0;
        switch (arule[b]) {
            case 0: a = 1 - v.a; break;
            case 1: a = v.a + 1; break;
            case 2: a = v.a - 1; break;
            case 3: a = 5 - v.a; break;
            case 4: a = v.a + 3; break;
        }
        w.a = (a % p.m + p.m) % p.m;
        return w;
    });
}

std::optional<VertexMap> explicit_reversal_map(const GraphParams& p) {
    if (p.n == 3) return reversal_map_n3(p);
    if (p.k == 2 && p.n == 5) return reversal_map_k2n5(p);
    if (p.k == 2 && p.n == 7 && (p.m == 3 || p.m == 6)) return reversal_map_b2m7(p);
    if (p.k == 2 && p.m == 6 && p.n == 21) return reversal_map_b2621(p);
    return std::nullopt;
}

std::vector<VertexIndex> orbit_of(VertexIndex seed, std::span<const VertexMap> generators) {
    std::set<VertexIndex> orbit{seed};
    std::vector<VertexIndex> frontier{seed};
    while (!frontier.empty()) {
        std::vector<VertexIndex> next;
        for (VertexIndex v : frontier)
            for (const VertexMap& g : generators) {
                const VertexIndex y = g.apply(v);
                if (orbit.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {orbit.begin(), orbit.end()};
}

std::string permutation_string(const VertexMap& m) {
    std::ostringstream os;
    for (size_t i = 0; i < m.image.size(); ++i) os << i << " -> " << m.image[i] << '\n';
    return os.str();
}

}  // namespace bouwer
