#include "bouwer/params.hpp"

namespace bouwer {

long long mod_pow(long long b, long long e, long long m) {
    if (m == 1) return 0;
    long long r = 1;
    b %= m;
    if (b < 0) b += m;
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

long long mod_inverse(long long a, long long m) {
    long long old_r = a % m, r = m;
    if (old_r < 0) old_r += m;
    long long old_s = 1, s = 0;
    while (r != 0) {
        long long q = old_r / r;
        long long t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw std::domain_error("mod_inverse: argument is not a unit");
    return old_s < 0 ? old_s + m : old_s;
}

int multiplicative_order(long long a, long long m) {
    a %= m;
    if (a < 0) a += m;
    long long x = a % m;
    for (int t = 1; t <= m; ++t) {
        if (x == 1) return t;
        x = x * a % m;
    }
    throw std::domain_error("multiplicative_order: argument is not a unit");
}

GraphParams validate_params(int k, int m, int n) {
    if (k < 2 || m < 2 || n < 2)
        throw BouwerError(ErrorCode::TooSmall,
                          "parameters must all be at least 2: k=" + std::to_string(k) +
                              " m=" + std::to_string(m) + " n=" + std::to_string(n));
    if (mod_pow(2, m, n) != 1)
        throw BouwerError(ErrorCode::NotUnit,
                          "2^" + std::to_string(m) + " is not 1 mod " + std::to_string(n));

    GraphParams p;
    p.k = k;
    p.m = m;
    p.n = n;
    p.inv2 = static_cast<int>(mod_inverse(2, n));
    p.ord2 = multiplicative_order(2, n);
    p.pow2.resize(static_cast<size_t>(m));
    long long x = 1;
    for (int a = 0; a < m; ++a) {
        p.pow2[static_cast<size_t>(a)] = static_cast<int>(x);
        x = x * 2 % n;
    }
    p.npow.resize(static_cast<size_t>(k));
    p.npow[0] = 1;
    for (int i = 1; i < k; ++i) p.npow[static_cast<size_t>(i)] = p.npow[static_cast<size_t>(i - 1)] * n;
    return p;
}

}  // namespace bouwer
