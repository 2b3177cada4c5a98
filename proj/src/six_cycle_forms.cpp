#include "bouwer/six_cycle_forms.hpp"

#include <array>

namespace bouwer {

namespace {

struct Term {
    int slot;
    int sign;
    int pw;
};

struct VPat {
    int a_off = 0;
    std::vector<Term> terms;
};

struct Form {
    int form_id = 0;
    int nslots = 0;
    std::array<VPat, 5> tail;  // the five vertices after the zero vertex
};

constexpr int R = 0, S = 1, T = 2;

Term t(int slot, int sign, int pw) { return Term{slot, sign, pw}; }

// The 16 shapes of a 6-cycle through the zero vertex. Free indices are
// pairwise distinct wherever two or three appear.
std::vector<Form> form_table() {
    std::vector<Form> out;
    auto add = [&](int id, int nslots, VPat v1, VPat v2, VPat v3, VPat v4, VPat v5) {
        out.push_back(Form{id, nslots, {std::move(v1), std::move(v2), std::move(v3), std::move(v4), std::move(v5)}});
    };

    add(1, 1, {1, {}}, {2, {t(R, +1, 1)}}, {1, {t(R, +1, 1)}}, {0, {t(R, +1, 0)}},
        {1, {t(R, +1, 0)}});
    add(2, 1, {1, {}}, {0, {t(R, -1, 0)}}, {1, {t(R, -1, 0)}}, {2, {t(R, +1, 0)}},
        {1, {t(R, +1, 0)}});
    add(3, 2, {1, {}}, {0, {t(R, -1, 0)}}, {1, {t(S, +1, 0), t(R, -1, 0)}},
        {0, {t(S, +1, 0), t(R, -1, 0)}}, {1, {t(S, +1, 0)}});
    add(4, 1, {1, {}}, {0, {t(R, -1, 0)}}, {-1, {t(R, -1, 0)}}, {0, {t(R, -1, -1)}},
        {-1, {t(R, -1, -1)}});
    add(5, 2, {1, {t(R, +1, 0)}}, {2, {t(S, +1, 1), t(R, +1, 0)}}, {1, {t(S, +1, 1), t(R, -1, 0)}},
        {0, {t(S, +1, 0), t(R, -1, 0)}}, {1, {t(S, +1, 0)}});
    add(6, 2, {1, {t(R, +1, 0)}}, {0, {t(R, +1, 0)}}, {1, {t(S, +1, 0), t(R, +1, 0)}},
        {0, {t(S, +1, 0)}}, {1, {t(S, +1, 0)}});
    add(7, 1, {1, {t(R, +1, 0)}}, {0, {t(R, +1, 0)}}, {-1, {t(R, +1, -1)}}, {0, {t(R, +1, -1)}},
        {-1, {}});
    add(8, 3, {1, {t(R, +1, 0)}}, {0, {t(R, +1, 0), t(S, -1, 0)}},
        {1, {t(R, +1, 0), t(S, -1, 0), t(T, +1, 0)}}, {0, {t(T, +1, 0), t(S, -1, 0)}},
        {1, {t(T, +1, 0)}});
    add(9, 2, {1, {t(R, +1, 0)}}, {0, {t(R, +1, 0), t(S, -1, 0)}},
        {-1, {t(R, +1, -1), t(S, -1, 0)}}, {0, {t(R, +1, -1), t(S, -1, -1)}},
        {-1, {t(S, -1, -1)}});
    add(10, 1, {-1, {}}, {0, {t(R, +1, -1)}}, {1, {t(R, +1, -1)}}, {0, {t(R, -1, -1)}},
        {-1, {t(R, -1, -1)}});
    add(11, 2, {-1, {}}, {0, {t(R, +1, -1)}}, {-1, {t(R, +1, -1), t(S, -1, -1)}},
        {0, {t(R, +1, -1), t(S, -1, -1)}}, {-1, {t(S, -1, -1)}});
    add(12, 1, {-1, {}}, {-2, {t(R, -1, -2)}}, {-1, {t(R, -1, -2)}}, {-2, {t(R, -1, -1)}},
        {-1, {t(R, -1, -1)}});
    add(13, 2, {-1, {t(R, -1, -1)}}, {0, {t(R, -1, -1)}}, {-1, {t(R, -1, -1), t(S, -1, -1)}},
        {0, {t(S, -1, -1)}}, {-1, {t(S, -1, -1)}});
    add(14, 2, {-1, {t(R, -1, -1)}}, {0, {t(R, -1, -1), t(S, +1, -1)}},
        {1, {t(R, +1, -1), t(S, +1, -1)}}, {0, {t(R, +1, -1), t(S, -1, -1)}},
        {-1, {t(S, -1, -1)}});
    add(15, 3, {-1, {t(R, -1, -1)}}, {0, {t(R, -1, -1), t(S, +1, -1)}},
        {-1, {t(R, -1, -1), t(S, +1, -1), t(T, -1, -1)}}, {0, {t(S, +1, -1), t(T, -1, -1)}},
        {-1, {t(T, -1, -1)}});
    add(16, 2, {-1, {t(R, -1, -1)}}, {-2, {t(R, -1, -1), t(S, -1, -2)}},
        {-1, {t(R, -1, -2), t(S, -1, -2)}}, {-2, {t(R, -1, -2), t(S, -1, -1)}},
        {-1, {t(S, -1, -1)}});

    return out;
}

const std::vector<Form>& forms() {
    static const std::vector<Form> table = form_table();
    return table;
}

VertexIndex materialize(const GraphParams& p, const VPat& pat, const int idx[3]) {
    Vertex v = origin_vertex(p);
    int a = pat.a_off % p.m;
    if (a < 0) a += p.m;
    v.a = a;
    for (const Term& term : pat.terms) {
        const int j = idx[term.slot] - 1;
        int c = p.pow2_at(term.pw);
        if (term.sign < 0) c = (p.n - c) % p.n;
        v.b[static_cast<size_t>(j)] = (v.b[static_cast<size_t>(j)] + c) % p.n;
    }
    return vertex_index(p, v);
}

}  // namespace

SixCycleMatcher::SixCycleMatcher(const GraphParams& p) : params_(p) {
    const VertexIndex o = vertex_index(p, origin_vertex(p));
    for (const Form& f : forms()) {
        int idx[3] = {0, 0, 0};
        auto emit = [&]() {
            std::array<VertexIndex, 6> seq;
            seq[0] = o;
            for (int i = 0; i < 5; ++i) seq[static_cast<size_t>(i + 1)] = materialize(p, f.tail[static_cast<size_t>(i)], idx);
            for (int i = 0; i < 6; ++i)
                for (int j = i + 1; j < 6; ++j)
                    if (seq[static_cast<size_t>(i)] == seq[static_cast<size_t>(j)]) return;
            Cycle c = canonical_cycle(seq);
            SixCycleForm form{f.form_id, idx[0], idx[1], idx[2], false};
            auto& matches = table_[c];
            if (!matches.empty()) {
                // Index-permuted reinstantiations of the same shape describe
                // the reversed traversal; only cross-form hits are collisions.
                for (const SixCycleForm& prev : matches)
                    if (prev.form_id != f.form_id) collisions_ = true;
            }
            matches.push_back(form);
        };
        const int kk = p.k;
        if (f.nslots == 1) {
            for (idx[0] = 1; idx[0] < kk; ++idx[0]) emit();
        } else if (f.nslots == 2) {
            for (idx[0] = 1; idx[0] < kk; ++idx[0])
                for (idx[1] = 1; idx[1] < kk; ++idx[1])
                    if (idx[1] != idx[0]) emit();
        } else {
            for (idx[0] = 1; idx[0] < kk; ++idx[0])
                for (idx[1] = 1; idx[1] < kk; ++idx[1])
                    for (idx[2] = 1; idx[2] < kk; ++idx[2])
                        if (idx[0] != idx[1] && idx[1] != idx[2] && idx[0] != idx[2]) emit();
        }
    }
}

std::optional<SixCycleForm> SixCycleMatcher::match(const Cycle& cycle) const {
    auto it = table_.find(cycle);
    if (it == table_.end()) {
        Cycle canon = canonical_cycle(cycle.v);
        it = table_.find(canon);
        if (it == table_.end()) return std::nullopt;
    }
    SixCycleForm f = it->second.front();
    for (const SixCycleForm& other : it->second)
        if (other.form_id != f.form_id) f.ambiguous = true;
    return f;
}

Cycle SixCycleMatcher::reconstruct(const SixCycleForm& f) const {
    const int idx[3] = {f.r, f.s, f.t};
    for (const Form& form : forms()) {
        if (form.form_id != f.form_id) continue;
        std::array<VertexIndex, 6> seq;
        seq[0] = vertex_index(params_, origin_vertex(params_));
        for (int i = 0; i < 5; ++i) seq[static_cast<size_t>(i + 1)] = materialize(params_, form.tail[static_cast<size_t>(i)], idx);
        return canonical_cycle(seq);
    }
    throw std::invalid_argument("reconstruct: unknown form id " + std::to_string(f.form_id));
}

long long SixCycleMatcher::expected_form_count(int k, int form_id) {
    const long long km1 = k - 1, km2 = k - 2, km3 = k - 3;
    switch (form_id) {
        case 1:
        case 2:
        case 4:
        case 7:
        case 10:
        case 12:
            return km1;
        case 3:
        case 5:
        case 9:
        case 11:
            return km1 * km2;
        case 6:
        case 13:
        case 14:
        case 16:
            // reversal identifies (r,s) with (s,r)
            return km1 * km2 / 2;
        case 8:
        case 15:
            // reversal identifies (r,s,t) with (t,s,r)
            return km1 * km2 * (km3 > 0 ? km3 : 0) / 2;
        default:
            throw std::invalid_argument("expected_form_count: form id out of range");
    }
}

std::map<int, long long> six_cycle_form_census(const BouwerGraph& g, const SixCycleMatcher& m) {
    std::map<int, long long> census;
    const VertexIndex o = vertex_index(g.params(), origin_vertex(g.params()));
    for (const Cycle& c : enumerate_six_cycles_at(g, o)) {
        auto f = m.match(c);
        census[f ? f->form_id : 0] += 1;
    }
    return census;
}

}  // namespace bouwer
