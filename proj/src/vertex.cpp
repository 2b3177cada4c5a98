#include "bouwer/vertex.hpp"

namespace bouwer {

VertexIndex vertex_index(const GraphParams& p, const Vertex& v) {
    long long idx = static_cast<long long>(v.a) * p.npow[static_cast<size_t>(p.k - 1)];
    for (int i = 0; i < p.k - 1; ++i)
        idx += static_cast<long long>(v.b[static_cast<size_t>(i)]) * p.npow[static_cast<size_t>(i)];
    return static_cast<VertexIndex>(idx);
}

Vertex vertex_at(const GraphParams& p, VertexIndex idx) {
    Vertex v;
    long long rest = idx;
    v.a = static_cast<int>(rest / p.npow[static_cast<size_t>(p.k - 1)]);
    rest %= p.npow[static_cast<size_t>(p.k - 1)];
    v.b.resize(static_cast<size_t>(p.k - 1));
    for (int i = 0; i < p.k - 1; ++i) {
        v.b[static_cast<size_t>(i)] = static_cast<int>(rest % p.n);
        rest /= p.n;
    }
    return v;
}

Vertex origin_vertex(const GraphParams& p) {
    Vertex v;
    v.a = 0;
    v.b.assign(static_cast<size_t>(p.k - 1), 0);
    return v;
}

Vertex axis_vertex(const GraphParams& p, int a, int j, long long c) {
    Vertex v = origin_vertex(p);
    long long am = a % p.m;
    if (am < 0) am += p.m;
    v.a = static_cast<int>(am);
    long long cm = c % p.n;
    if (cm < 0) cm += p.n;
    v.b[static_cast<size_t>(j)] = static_cast<int>(cm);
    return v;
}

Vertex make_vertex(const GraphParams& p, long long a, const std::vector<long long>& b) {
    Vertex v;
    long long am = a % p.m;
    if (am < 0) am += p.m;
    v.a = static_cast<int>(am);
    v.b.resize(static_cast<size_t>(p.k - 1));
    for (size_t i = 0; i < b.size(); ++i) {
        long long cm = b[i] % p.n;
        if (cm < 0) cm += p.n;
        v.b[i] = static_cast<int>(cm);
    }
    return v;
}

std::string format_vertex(const Vertex& v) {
    std::string s = "(" + std::to_string(v.a) + ";";
    for (size_t i = 0; i < v.b.size(); ++i) {
        s += (i == 0 ? " " : ",");
        s += std::to_string(v.b[i]);
    }
    s += ")";
    return s;
}

}  // namespace bouwer
