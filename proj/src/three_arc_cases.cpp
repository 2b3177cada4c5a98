#include "bouwer/three_arc_cases.hpp"

#include <array>

namespace bouwer {

namespace {

// Tail coordinate contribution sign * 2^pw * e_slot with slot 0=r, 1=s, 2=t.
struct Term {
    int slot;
    int sign;
    int pw;
};

struct VPat {
    int a_off = 0;
    std::vector<Term> terms;
};

// One concrete branch of a case: the three vertices after the origin, the
// number of index slots it instantiates, and which slot pairs must differ.
struct Shape {
    int case_id = 0;
    bool with_d = false;
    int nslots = 0;
    std::vector<std::pair<int, int>> distinct;
    std::array<VPat, 3> tail;
};

constexpr int R = 0, S = 1, T = 2;

Term t(int slot, int sign, int pw) { return Term{slot, sign, pw}; }

// The 28 shapes of a 3-arc leaving the zero vertex, written as
// (a-offset, tail displacement) triples. Each "d = 0 or ..." alternative in
// the taxonomy becomes two shapes sharing a case_id.
std::vector<Shape> shape_table() {
    std::vector<Shape> out;
    auto add = [&](int id, bool with_d, int nslots, std::vector<std::pair<int, int>> distinct,
                   VPat v1, VPat v2, VPat v3) {
        out.push_back(Shape{id, with_d, nslots, std::move(distinct), {std::move(v1), std::move(v2), std::move(v3)}});
    };

    // (1,0) start
    add(1, false, 0, {}, {1, {}}, {2, {}}, {3, {}});
    add(1, true, 1, {}, {1, {}}, {2, {}}, {3, {t(R, +1, 2)}});
    add(2, false, 1, {}, {1, {}}, {2, {}}, {1, {t(R, -1, 1)}});
    add(3, false, 1, {}, {1, {}}, {2, {t(R, +1, 1)}}, {3, {t(R, +1, 1)}});
    add(3, true, 2, {}, {1, {}}, {2, {t(R, +1, 1)}}, {3, {t(R, +1, 1), t(S, +1, 2)}});
    add(4, false, 1, {}, {1, {}}, {2, {t(R, +1, 1)}}, {1, {t(R, +1, 1)}});
    add(4, true, 2, {{S, R}}, {1, {}}, {2, {t(R, +1, 1)}}, {1, {t(R, +1, 1), t(S, -1, 1)}});
    add(5, false, 1, {}, {1, {}}, {0, {t(R, -1, 0)}}, {1, {t(R, -1, 0)}});
    add(5, true, 2, {{S, R}}, {1, {}}, {0, {t(R, -1, 0)}}, {1, {t(R, -1, 0), t(S, +1, 0)}});
    add(6, false, 1, {}, {1, {}}, {0, {t(R, -1, 0)}}, {-1, {t(R, -1, 0)}});
    add(6, true, 2, {}, {1, {}}, {0, {t(R, -1, 0)}}, {-1, {t(R, -1, 0), t(S, -1, -1)}});

    // (1,e_r) start
    add(7, false, 1, {}, {1, {t(R, +1, 0)}}, {2, {t(R, +1, 0)}}, {3, {t(R, +1, 0)}});
    add(7, true, 2, {}, {1, {t(R, +1, 0)}}, {2, {t(R, +1, 0)}}, {3, {t(R, +1, 0), t(S, +1, 2)}});
    add(8, false, 2, {}, {1, {t(R, +1, 0)}}, {2, {t(R, +1, 0)}}, {1, {t(R, +1, 0), t(S, -1, 1)}});
    add(9, false, 2, {}, {1, {t(R, +1, 0)}}, {2, {t(R, +1, 0), t(S, +1, 1)}},
        {3, {t(R, +1, 0), t(S, +1, 1)}});
    add(9, true, 3, {}, {1, {t(R, +1, 0)}}, {2, {t(R, +1, 0), t(S, +1, 1)}},
        {3, {t(R, +1, 0), t(S, +1, 1), t(T, +1, 2)}});
    add(10, false, 2, {}, {1, {t(R, +1, 0)}}, {2, {t(R, +1, 0), t(S, +1, 1)}},
        {1, {t(R, +1, 0), t(S, +1, 1)}});
    add(10, true, 3, {{T, S}}, {1, {t(R, +1, 0)}}, {2, {t(R, +1, 0), t(S, +1, 1)}},
        {1, {t(R, +1, 0), t(S, +1, 1), t(T, -1, 1)}});
    add(11, false, 2, {}, {1, {t(R, +1, 0)}}, {0, {t(R, +1, 0)}}, {1, {t(R, +1, 0), t(S, +1, 0)}});
    add(12, false, 1, {}, {1, {t(R, +1, 0)}}, {0, {t(R, +1, 0)}}, {-1, {t(R, +1, 0)}});
    add(12, true, 2, {}, {1, {t(R, +1, 0)}}, {0, {t(R, +1, 0)}},
        {-1, {t(R, +1, 0), t(S, -1, -1)}});
    add(13, false, 2, {{S, R}}, {1, {t(R, +1, 0)}}, {0, {t(R, +1, 0), t(S, -1, 0)}},
        {1, {t(R, +1, 0), t(S, -1, 0)}});
    add(13, true, 3, {{S, R}, {T, S}}, {1, {t(R, +1, 0)}}, {0, {t(R, +1, 0), t(S, -1, 0)}},
        {1, {t(R, +1, 0), t(S, -1, 0), t(T, +1, 0)}});
    add(14, false, 2, {{S, R}}, {1, {t(R, +1, 0)}}, {0, {t(R, +1, 0), t(S, -1, 0)}},
        {-1, {t(R, +1, 0), t(S, -1, 0)}});
    add(14, true, 3, {{S, R}}, {1, {t(R, +1, 0)}}, {0, {t(R, +1, 0), t(S, -1, 0)}},
        {-1, {t(R, +1, 0), t(S, -1, 0), t(T, -1, -1)}});

    // (-1,0) start
    add(15, false, 1, {}, {-1, {}}, {0, {t(R, +1, -1)}}, {1, {t(R, +1, -1)}});
    add(15, true, 2, {}, {-1, {}}, {0, {t(R, +1, -1)}}, {1, {t(R, +1, -1), t(S, +1, 0)}});
    add(16, false, 1, {}, {-1, {}}, {0, {t(R, +1, -1)}}, {-1, {t(R, +1, -1)}});
    add(16, true, 2, {{S, R}}, {-1, {}}, {0, {t(R, +1, -1)}},
        {-1, {t(R, +1, -1), t(S, -1, -1)}});
    add(17, false, 1, {}, {-1, {}}, {-2, {}}, {-1, {t(R, +1, -2)}});
    add(18, false, 0, {}, {-1, {}}, {-2, {}}, {-3, {}});
    add(18, true, 1, {}, {-1, {}}, {-2, {}}, {-3, {t(R, -1, -3)}});
    add(19, false, 1, {}, {-1, {}}, {-2, {t(R, -1, -2)}}, {-1, {t(R, -1, -2)}});
    add(19, true, 2, {{S, R}}, {-1, {}}, {-2, {t(R, -1, -2)}},
        {-1, {t(R, -1, -2), t(S, +1, -2)}});
    add(20, false, 1, {}, {-1, {}}, {-2, {t(R, -1, -2)}}, {-3, {t(R, -1, -2)}});
    add(20, true, 2, {}, {-1, {}}, {-2, {t(R, -1, -2)}}, {-3, {t(R, -1, -2), t(S, -1, -3)}});

    // (-1,-2^{-1}e_r) start
    add(21, false, 1, {}, {-1, {t(R, -1, -1)}}, {0, {t(R, -1, -1)}}, {1, {t(R, -1, -1)}});
    add(21, true, 2, {}, {-1, {t(R, -1, -1)}}, {0, {t(R, -1, -1)}},
        {1, {t(R, -1, -1), t(S, +1, 0)}});
    add(22, false, 2, {}, {-1, {t(R, -1, -1)}}, {0, {t(R, -1, -1)}},
        {-1, {t(R, -1, -1), t(S, -1, -1)}});
    add(23, false, 2, {{S, R}}, {-1, {t(R, -1, -1)}}, {0, {t(R, -1, -1), t(S, +1, -1)}},
        {1, {t(R, -1, -1), t(S, +1, -1)}});
    add(23, true, 3, {{S, R}}, {-1, {t(R, -1, -1)}}, {0, {t(R, -1, -1), t(S, +1, -1)}},
        {1, {t(R, -1, -1), t(S, +1, -1), t(T, +1, 0)}});
    add(24, false, 2, {{S, R}}, {-1, {t(R, -1, -1)}}, {0, {t(R, -1, -1), t(S, +1, -1)}},
        {-1, {t(R, -1, -1), t(S, +1, -1)}});
    add(24, true, 3, {{S, R}, {T, S}}, {-1, {t(R, -1, -1)}}, {0, {t(R, -1, -1), t(S, +1, -1)}},
        {-1, {t(R, -1, -1), t(S, +1, -1), t(T, -1, -1)}});
    add(25, false, 2, {}, {-1, {t(R, -1, -1)}}, {-2, {t(R, -1, -1)}},
        {-1, {t(R, -1, -1), t(S, +1, -2)}});
    add(26, false, 1, {}, {-1, {t(R, -1, -1)}}, {-2, {t(R, -1, -1)}}, {-3, {t(R, -1, -1)}});
    add(26, true, 2, {}, {-1, {t(R, -1, -1)}}, {-2, {t(R, -1, -1)}},
        {-3, {t(R, -1, -1), t(S, -1, -3)}});
    add(27, false, 2, {}, {-1, {t(R, -1, -1)}}, {-2, {t(R, -1, -1), t(S, -1, -2)}},
        {-1, {t(R, -1, -1), t(S, -1, -2)}});
    add(27, true, 3, {{T, S}}, {-1, {t(R, -1, -1)}}, {-2, {t(R, -1, -1), t(S, -1, -2)}},
        {-1, {t(R, -1, -1), t(S, -1, -2), t(T, +1, -2)}});
    add(28, false, 2, {}, {-1, {t(R, -1, -1)}}, {-2, {t(R, -1, -1), t(S, -1, -2)}},
        {-3, {t(R, -1, -1), t(S, -1, -2)}});
    add(28, true, 3, {}, {-1, {t(R, -1, -1)}}, {-2, {t(R, -1, -1), t(S, -1, -2)}},
        {-3, {t(R, -1, -1), t(S, -1, -2), t(T, -1, -3)}});

    return out;
}

const std::vector<Shape>& shapes() {
    static const std::vector<Shape> table = shape_table();
    return table;
}

VertexIndex materialize(const GraphParams& p, const VPat& pat, const int idx[3]) {
    Vertex v = origin_vertex(p);
    int a = pat.a_off % p.m;
    if (a < 0) a += p.m;
    v.a = a;
    for (const Term& term : pat.terms) {
        const int j = idx[term.slot] - 1;  // slots are 1-based indices into b
        int c = p.pow2_at(term.pw);
        if (term.sign < 0) c = (p.n - c) % p.n;
        v.b[static_cast<size_t>(j)] = (v.b[static_cast<size_t>(j)] + c) % p.n;
    }
    return vertex_index(p, v);
}

}  // namespace

ThreeArcClassifier::ThreeArcClassifier(const GraphParams& p) : params_(p) {
    const int kk = p.k;
    for (const Shape& sh : shapes()) {
        int idx[3] = {0, 0, 0};
        auto emit = [&]() {
            for (const auto& [x, y] : sh.distinct)
                if (idx[x] == idx[y]) return;
            std::vector<VertexIndex> walk(3);
            for (int i = 0; i < 3; ++i) walk[static_cast<size_t>(i)] = materialize(p, sh.tail[static_cast<size_t>(i)], idx);
            // 3-arc validity: origin != walk[1] and walk[0] != walk[2]
            // (adjacency holds by construction, collapses only for tiny m).
            const VertexIndex o = vertex_index(p, origin_vertex(p));
            if (walk[1] == o || walk[0] == walk[2]) return;
            ThreeArcCase c{sh.case_id, sh.with_d, idx[0], idx[1], idx[2], false};
            auto& matches = table_[walk];
            if (!matches.empty()) collisions_ = true;
            matches.push_back(c);
        };
        if (sh.nslots == 0) {
            emit();
        } else {
            for (idx[0] = 1; idx[0] < kk; ++idx[0]) {
                if (sh.nslots == 1) {
                    emit();
                    continue;
                }
                for (idx[1] = 1; idx[1] < kk; ++idx[1]) {
                    if (sh.nslots == 2) {
                        emit();
                        continue;
                    }
                    for (idx[2] = 1; idx[2] < kk; ++idx[2]) emit();
                }
                idx[2] = 0;
            }
        }
    }
}

std::optional<ThreeArcCase> ThreeArcClassifier::classify(const SArc& arc) const {
    if (arc.v.size() != 4 || arc.v[0] != vertex_index(params_, origin_vertex(params_)))
        throw std::invalid_argument("classify: expected a 3-arc rooted at the zero vertex");
    const std::vector<VertexIndex> tail(arc.v.begin() + 1, arc.v.end());
    auto it = table_.find(tail);
    if (it == table_.end()) return std::nullopt;
    ThreeArcCase c = it->second.front();
    c.ambiguous = it->second.size() > 1;
    return c;
}

SArc ThreeArcClassifier::reconstruct(const ThreeArcCase& c) const {
    const int idx[3] = {c.r, c.s, c.t};
    for (const Shape& sh : shapes()) {
        if (sh.case_id != c.case_id || sh.with_d != c.with_d) continue;
        SArc arc;
        arc.v.push_back(vertex_index(params_, origin_vertex(params_)));
        for (const VPat& pat : sh.tail) arc.v.push_back(materialize(params_, pat, idx));
        return arc;
    }
    throw std::invalid_argument("reconstruct: unknown case id " + std::to_string(c.case_id));
}

long long ThreeArcClassifier::expected_case_count(int k, int case_id) {
    const long long km1 = k - 1, km2 = k - 2;
    switch (case_id) {
        case 1:
        case 18:
            return k;
        case 2:
        case 17:
            return km1;
        case 3:
        case 6:
        case 7:
        case 12:
        case 15:
        case 20:
        case 21:
        case 26:
            return k * km1;
        case 4:
        case 5:
        case 8:
        case 11:
        case 16:
        case 19:
        case 22:
        case 25:
            return km1 * km1;
        case 9:
        case 28:
            return k * km1 * km1;
        case 10:
        case 27:
            return km1 * km1 * km1;
        case 13:
        case 24:
            return km1 * km1 * km2;
        case 14:
        case 23:
            return k * km1 * km2;
        default:
            throw std::invalid_argument("expected_case_count: case id out of range");
    }
}

std::map<int, long long> three_arc_census(const BouwerGraph& g, const ThreeArcClassifier& cls) {
    std::map<int, long long> census;
    const VertexIndex root = vertex_index(g.params(), origin_vertex(g.params()));
    for (const SArc& arc : enumerate_s_arcs(g, root, 3)) {
        auto c = cls.classify(arc);
        census[c ? c->case_id : 0] += 1;
    }
    return census;
}

}  // namespace bouwer
