#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bouwer {

// Error taxonomy for parameter validation and structural checks.
enum class ErrorCode {
    TooSmall,            // k, m or n below 2
    NotUnit,             // 2^m not congruent to 1 mod n
    IntegrityViolation,  // built adjacency failed symmetry/regularity/simplicity
    WrongCase,           // explicit reversal map requested for parameters it does not cover
};

class BouwerError : public std::runtime_error {
public:
    BouwerError(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// b^e mod m for e >= 0, m >= 1.
long long mod_pow(long long b, long long e, long long m);

// Inverse of a mod m via extended gcd; throws std::domain_error if gcd(a,m) != 1.
long long mod_inverse(long long a, long long m);

// Least t > 0 with a^t = 1 mod m; throws std::domain_error if a is not a unit.
int multiplicative_order(long long a, long long m);

// Validated triple (k,m,n) plus the derived constants every other
// operation needs: 2^{-1} mod n, the multiplicative order of 2 mod n,
// a table of 2^a mod n, and the mixed-radix weights n^i.
struct GraphParams {
    int k = 0;  // half-valency
    int m = 0;  // modulus of the leading coordinate
    int n = 0;  // modulus of the k-1 trailing coordinates
    int inv2 = 0;
    int ord2 = 0;
    std::vector<int> pow2;        // pow2[a] = 2^a mod n, a = 0..m-1
    std::vector<long long> npow;  // npow[i] = n^i, i = 0..k-1

    long long order() const { return static_cast<long long>(m) * npow[k - 1]; }
    int valency() const { return 2 * k; }

    // 2^e mod n for any integer exponent; exponents reduce mod m since ord2 | m.
    int pow2_at(long long e) const {
        long long r = e % m;
        if (r < 0) r += m;
        return pow2[static_cast<size_t>(r)];
    }

    bool operator==(const GraphParams&) const = default;
};

// Accepts any integers; throws BouwerError(TooSmall) if k, m or n < 2 and
// BouwerError(NotUnit) if 2^m != 1 mod n.
GraphParams validate_params(int k, int m, int n);

}  // namespace bouwer
