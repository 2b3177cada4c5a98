#include "bouwer/params.hpp"

#include "doctest.h"

using namespace bouwer;

TEST_CASE("modular helpers") {
    CHECK(mod_pow(2, 6, 9) == 1);
    CHECK(mod_pow(2, 3, 9) == 8);
    CHECK(mod_pow(2, 0, 7) == 1);
    CHECK(mod_inverse(2, 9) == 5);
    CHECK(mod_inverse(2, 3) == 2);
    CHECK(mod_inverse(2, 21) == 11);
    CHECK_THROWS_AS(mod_inverse(6, 9), std::domain_error);
    CHECK(multiplicative_order(2, 9) == 6);
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(multiplicative_order(2, 31) == 5);
    CHECK_THROWS_AS(multiplicative_order(2, 8), std::domain_error);
}

TEST_CASE("validate_params accepts (2,6,9) with the right constants") {
    const GraphParams p = validate_params(2, 6, 9);
    CHECK(p.inv2 == 5);
    CHECK(p.ord2 == 6);
    CHECK(p.order() == 54);
    CHECK(p.valency() == 4);
    CHECK(p.pow2 == std::vector<int>{1, 2, 4, 8, 7, 5});
}

TEST_CASE("validate_params rejections") {
    CHECK_THROWS_AS(validate_params(2, 3, 9), BouwerError);   // 2^3 = 8 != 1 mod 9
    CHECK_THROWS_AS(validate_params(1, 6, 9), BouwerError);   // k too small
    CHECK_THROWS_AS(validate_params(2, 1, 9), BouwerError);
    CHECK_THROWS_AS(validate_params(2, 6, 1), BouwerError);
    try {
        validate_params(2, 3, 9);
        CHECK(false);
    } catch (const BouwerError& e) {
        CHECK(e.code() == ErrorCode::NotUnit);
    }
    try {
        validate_params(1, 6, 9);
        CHECK(false);
    } catch (const BouwerError& e) {
        CHECK(e.code() == ErrorCode::TooSmall);
    }
}

TEST_CASE("valid parameters force n odd") {
    for (int m = 2; m <= 12; ++m)
        for (int n = 2; n <= 63; ++n) {
            if (mod_pow(2, m, n) != 1) continue;
            const GraphParams p = validate_params(2, m, n);
            CHECK(p.n % 2 == 1);
            CHECK(p.m % p.ord2 == 0);
            CHECK(2 * p.inv2 % p.n == 1);
        }
}

TEST_CASE("pow2_at reduces exponents by the key identity") {
    const GraphParams p = validate_params(3, 6, 9);
    CHECK(p.pow2_at(0) == 1);
    CHECK(p.pow2_at(-1) == p.inv2);
    CHECK(p.pow2_at(6) == 1);
    CHECK(p.pow2_at(-6) == 1);
    for (int e = -20; e <= 20; ++e)
        CHECK(static_cast<long long>(p.pow2_at(e)) * p.pow2_at(-e) % p.n == 1);
}
