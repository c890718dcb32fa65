#include <doctest.h>

#include "sgs/bigint.hpp"
#include "sgs/montecarlo.hpp"

using namespace sgs;

TEST_CASE("decimal round trip and basic arithmetic") {
    BigUint a = BigUint::from_decimal("340282366920938463463374607431768211456");  // 2^128
    CHECK(a.to_decimal() == "340282366920938463463374607431768211456");
    CHECK(a.bit_length() == 129);
    BigUint b = BigUint::from_decimal("18446744073709551615");  // 2^64 - 1
    CHECK((a + b).to_decimal() == "340282366920938463481821351505477763071");
    CHECK((a - b).to_decimal() == "340282366920938463444927863358058659841");
    CHECK((b * b).to_decimal() == "340282366920938463426481119284349108225");
    CHECK(BigUint(0).to_decimal() == "0");
    CHECK(BigUint(7).mul_u64(6).to_u64() == 42);
}

TEST_CASE("divmod agrees with multiplication, including multi-limb divisors") {
    SplitMix64 rng(123);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<std::uint64_t> alimbs, blimbs;
        for (int i = 0; i < 1 + static_cast<int>(rng.below(4)); ++i) alimbs.push_back(rng.next());
        for (int i = 0; i < 1 + static_cast<int>(rng.below(3)); ++i) blimbs.push_back(rng.next());
        BigUint a = BigUint::from_limbs(alimbs);
        BigUint b = BigUint::from_limbs(blimbs);
        if (b.is_zero()) continue;
        BigUint q, r;
        BigUint::divmod(a, b, q, r);
        CHECK(r < b);
        CHECK(q * b + r == a);
    }
}

TEST_CASE("gcd and rational normalization") {
    BigUint g = BigUint::gcd(BigUint::from_decimal("123456789012345678901234567890"),
                             BigUint::from_decimal("9876543210987654321"));
    CHECK((BigUint::from_decimal("123456789012345678901234567890") % g).is_zero());
    CHECK((BigUint::from_decimal("9876543210987654321") % g).is_zero());

    Rational half = Rational::of(2, 4);
    CHECK(half == Rational::of(1, 2));
    Rational x = Rational::of(1, 3) + Rational::of(1, 6);
    CHECK(x == Rational::of(1, 2));
    CHECK((Rational::of(-3, 9)).to_string() == "-1/3");
    CHECK((Rational::of(5, 1) * Rational::of(2, 5)) == Rational(2));
    CHECK(Rational::of(7, 2).to_double() == doctest::Approx(3.5));
    CHECK(Rational::of(1, 3) < Rational::of(1, 2));
    CHECK((Rational::of(1, 2) - Rational::of(1, 2)).is_zero());
    CHECK((Rational::of(3, 4) / Rational::of(-3, 2)) == Rational::of(-1, 2));
}

TEST_CASE("binomial coefficients are exact") {
    CHECK(binomial(3, 2).to_u64() == 3);
    CHECK(binomial(10, 0).to_u64() == 1);
    CHECK(binomial(10, 11).is_zero());
    CHECK(binomial(52, 26).to_decimal() == "495918532948104");
    CHECK(binomial(200, 100).to_decimal() ==
          "90548514656103281165404177077484163874504589675413336841320");
}

TEST_CASE("128-bit decimal rendering") {
    unsigned __int128 v = 1;
    for (int i = 0; i < 12; ++i) v *= 10;
    CHECK(u128_to_string(v) == "1000000000000");
    CHECK(u128_to_string(0) == "0");
    unsigned __int128 big = (static_cast<unsigned __int128>(0x123456789abcdef0ull) << 64) | 0xfedcba9876543210ull;
    CHECK(u128_to_string(big) == "24197857203266734881846307747534221840");
}
