#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "dup23/diophantine.hpp"

using namespace dup23;

namespace {

// ln v from GMP's mantissa/exponent split.
double ln_big(const mpz_class& v) {
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace

TEST_CASE("guided search on tiny boxes") {
    const auto one = guided_search(1, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == GuidedSolution{2, 0, 1, 1, 1, 1});
    CHECK(one[0].value() == 5);

    const auto ten = guided_search(10, 10);
    std::vector<DuplicatePair> pairs;
    for (const auto& g : ten) pairs.push_back(g.as_pair());
    CHECK(pairs == known_duplicates());
    CHECK(ten[1] == GuidedSolution{3, 1, 1, 2, 2, 1});

    CHECK_THROWS_AS(guided_search(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(guided_search(5, 0), std::invalid_argument);
}

TEST_CASE("guided search matches a four-exponent brute force") {
    std::vector<DuplicatePair> brute;
    for (Exponent x = 1; x <= 40; ++x)
        for (Exponent a = 0; a < x; ++a)
            for (Exponent y = 0; y <= 25; ++y)
                for (Exponent b = y + 1; b <= 25; ++b)
                    if (pow2(x) + pow3(y) == pow2(a) + pow3(b)) brute.push_back(DuplicatePair::of(x, y, a, b));
    std::sort(brute.begin(), brute.end(), [](const DuplicatePair& l, const DuplicatePair& r) { return l.value < r.value; });

    std::vector<DuplicatePair> guided;
    for (const auto& g : guided_search(40, 25)) guided.push_back(g.as_pair());
    CHECK(guided == brute);
}

TEST_CASE("solutions satisfy the forcing identity") {
    for (const auto& p : known_duplicates()) {
        const Exponent s = p.first.x - p.second.x;
        const Exponent d = p.second.y - p.first.y;
        CAPTURE(p.value.get_str());
        CHECK(p.second.x == vp(2, mpz_class(pow3(d) - 1)));
        CHECK(p.first.y == vp(3, mpz_class(pow2(s) - 1)));
        CHECK(p.second.x == v2_pow3_minus1(d));
        CHECK(p.first.y == v3_pow2_minus1(s));
        CHECK(std::abs(log_gap(s, d)) < 1e-12);
        CHECK(std::abs(log_gap(s, d)) < kLogPrefilterTolerance);
    }
}

TEST_CASE("log_gap tracks the exact logarithms") {
    for (Exponent s = 1; s <= 300; s += 7) {
        for (Exponent d = 1; d <= 300; d += 11) {
            const mpz_class lhs = pow2(v2_pow3_minus1(d)) * (pow2(s) - 1);
            const mpz_class rhs = pow3(v3_pow2_minus1(s)) * (pow3(d) - 1);
            CAPTURE(s);
            CAPTURE(d);
            CHECK(std::abs(log_gap(s, d) - (ln_big(lhs) - ln_big(rhs))) < 1e-9);
        }
    }
}

TEST_CASE("thread count does not change the result") {
    GuidedStats serialStats;
    const auto serial = guided_search(150, 120, 1, &serialStats);
    CHECK(serialStats.pairsExamined == 150u * 120u);
    CHECK(serialStats.prefilterSurvivors >= 5);
    for (unsigned t : {2u, 3u, 7u, 500u}) {
        GuidedStats stats;
        CAPTURE(t);
        CHECK(guided_search(150, 120, t, &stats) == serial);
        CHECK(stats.pairsExamined == serialStats.pairsExamined);
        CHECK(stats.prefilterSurvivors == serialStats.prefilterSurvivors);
    }
}
