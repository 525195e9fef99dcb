#include <doctest.h>

#include <stdexcept>

#include "dup23/powersum.hpp"
#include "dup23/valuation.hpp"

using namespace dup23;

namespace {

// One division at a time; independent of the block-lifting path.
unsigned naive_vp(unsigned p, mpz_class n) {
    unsigned k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

}  // namespace

TEST_CASE("vp on small values") {
    CHECK(vp(2, 1) == 0);
    CHECK(vp(2, 12) == 2);
    CHECK(vp(3, 54) == 3);
    CHECK(vp(2, mpz_class(80)) == 4);  // 3^4 - 1
    CHECK(vp(2, mpz_class(3 * 3 * 3 * 3 - 1)) == naive_vp(2, 80));
    CHECK(vp(5, mpz_class(5 * 5 * 5 * 5 * 5 * 7)) == 5);
    CHECK(vp(7, std::uint64_t{343 * 2}) == 3);
}

TEST_CASE("vp rejects bad input") {
    CHECK_THROWS_AS(vp(2, mpz_class(0)), std::domain_error);
    CHECK_THROWS_AS(vp(3, std::uint64_t{0}), std::domain_error);
    CHECK_THROWS_AS(vp(2, mpz_class(-4)), std::domain_error);
    CHECK_THROWS_AS(vp(1, mpz_class(9)), std::invalid_argument);
    CHECK_THROWS_AS(v2_pow3_minus1(0), std::domain_error);
    CHECK_THROWS_AS(v3_pow2_minus1(0), std::domain_error);
}

TEST_CASE("vp block lifting agrees with single division on high powers") {
    for (unsigned p : {3u, 5u, 7u, 11u}) {
        for (unsigned k : {0u, 1u, 2u, 3u, 7u, 8u, 15u, 16u, 17u, 100u, 257u}) {
            mpz_class pk;
            mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
            const mpz_class n = pk * 2 * 1'000'003;
            CAPTURE(p);
            CAPTURE(k);
            CHECK(vp(p, n) == k);
            CHECK(naive_vp(p, n) == k);
        }
    }
}

TEST_CASE("closed forms at the listed points") {
    CHECK(v2_pow3_minus1(1) == 1);
    CHECK(v2_pow3_minus1(2) == 3);
    CHECK(v2_pow3_minus1(4) == 4);
    CHECK(v2_pow3_minus1(5) == 1);
    CHECK(v3_pow2_minus1(1) == 0);
    CHECK(v3_pow2_minus1(2) == 1);
    CHECK(v3_pow2_minus1(6) == 2);
    CHECK(v3_pow2_minus1(18) == 3);
}

TEST_CASE("closed forms match direct valuations for n <= 3000") {
    mpz_class p3 = 1;
    for (std::uint64_t n = 1; n <= 3000; ++n) {
        p3 *= 3;
        CAPTURE(n);
        REQUIRE(v2_pow3_minus1(n) == naive_vp(2, p3 - 1));
        REQUIRE(v3_pow2_minus1(n) == naive_vp(3, pow2(static_cast<Exponent>(n)) - 1));
    }
}

TEST_CASE("vp is additive and vanishes exactly off multiples") {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(20261016);
    for (int i = 0; i < 500; ++i) {
        mpz_class m = rng.get_z_bits(256) + 1;
        mpz_class n = rng.get_z_bits(256) + 1;
        // Bias toward high valuations.
        m *= pow3(static_cast<Exponent>(i % 37));
        n <<= static_cast<unsigned>(i % 23);
        for (unsigned p : {2u, 3u, 5u, 7u, 13u}) {
            CAPTURE(p);
            CHECK(vp(p, mpz_class(m * n)) == vp(p, m) + vp(p, n));
            CHECK((vp(p, m) == 0) == (m % p != 0));
            const auto rec = ValuationRecord::of(p, m);
            CHECK(rec.holds());
        }
    }
}

TEST_CASE("ValuationRecord") {
    auto r = ValuationRecord::of(2, 6);
    CHECK(r.k == 1);
    CHECK(r.exactly_divides());
    r.k = 2;
    CHECK_FALSE(r.holds());
}
