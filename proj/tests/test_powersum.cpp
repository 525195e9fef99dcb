#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "dup23/powersum.hpp"

using namespace dup23;

namespace {

using Rep = std::pair<Exponent, Exponent>;

// Double loop over the exponent grid: value -> reps by descending x.
std::map<mpz_class, std::vector<Rep>> brute_sums(const mpz_class& cap) {
    std::map<mpz_class, std::vector<Rep>> out;
    for (Exponent x = 0; pow2(x) <= cap; ++x)
        for (Exponent y = 0; pow3(y) <= cap; ++y)
            if (mpz_class v = pow2(x) + pow3(y); v <= cap) out[v].push_back({x, y});
    for (auto& [v, reps] : out) std::sort(reps.rbegin(), reps.rend());
    return out;
}

std::vector<std::string> values_of(const std::vector<SumGroup>& groups) {
    std::vector<std::string> out;
    for (const auto& g : groups) out.push_back(g.value.get_str());
    return out;
}

}  // namespace

TEST_CASE("enumerate_sums up to 10") {
    const auto groups = enumerate_sums(SearchBounds::up_to(10));
    CHECK(values_of(groups) == std::vector<std::string>{"2", "3", "4", "5", "7", "9", "10"});
    const auto& five = groups[3];
    REQUIRE(five.reps.size() == 2);
    CHECK(five.reps[0] == Representation::of(2, 0));
    CHECK(five.reps[1] == Representation::of(1, 1));
}

TEST_CASE("enumerate_sums edge caps") {
    const auto groups = enumerate_sums(SearchBounds::up_to(2));
    REQUIRE(groups.size() == 1);
    CHECK(groups[0].value == 2);
    CHECK(groups[0].reps[0].x == 0);
    CHECK(groups[0].reps[0].y == 0);

    CHECK_THROWS_AS(enumerate_sums(SearchBounds::up_to(1)), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_sums(SearchBounds{}), std::invalid_argument);
}

TEST_CASE("259 appears with both representations under 300") {
    for (const auto& g : enumerate_sums(SearchBounds::up_to(300))) {
        if (g.value != 259) continue;
        REQUIRE(g.reps.size() == 2);
        CHECK(g.reps[0] == Representation::of(8, 1));
        CHECK(g.reps[1] == Representation::of(4, 5));
        return;
    }
    FAIL("259 not enumerated");
}

TEST_CASE("enumeration matches the brute-force grid for random caps <= 1e4") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(2, 10'000);
    std::vector<int> caps{2, 3, 4, 5, 9, 10, 11, 259, 260, 10'000};
    for (int i = 0; i < 40; ++i) caps.push_back(dist(rng));
    for (int cap : caps) {
        CAPTURE(cap);
        const auto brute = brute_sums(cap);
        const auto groups = enumerate_sums(SearchBounds::up_to(cap));
        REQUIRE(groups.size() == brute.size());
        auto it = brute.begin();
        for (std::size_t i = 0; i < groups.size(); ++i, ++it) {
            if (i > 0) REQUIRE(groups[i - 1].value < groups[i].value);
            REQUIRE(groups[i].value == it->first);
            std::vector<Rep> reps;
            for (const auto& r : groups[i].reps) {
                REQUIRE(r.value == pow2(r.x) + pow3(r.y));
                reps.push_back({r.x, r.y});
            }
            REQUIRE(reps == it->second);
        }
    }
}

TEST_CASE("exponent caps restrict the grid") {
    SearchBounds b = SearchBounds::up_to(1000);
    b.maxExp2 = 3;
    b.maxExp3 = 2;
    const auto groups = enumerate_sums(b);
    std::size_t count = 0;
    for (const auto& g : groups)
        for (const auto& r : g.reps) {
            CHECK(r.x <= 3);
            CHECK(r.y <= 2);
            ++count;
        }
    CHECK(count == 12);
}

TEST_CASE("find_duplicates") {
    CHECK(find_duplicates(SearchBounds::up_to(4)).empty());
    CHECK(find_duplicates(SearchBounds::up_to(300)) == known_duplicates());
    CHECK(find_duplicates(SearchBounds::up_to(258)).size() == 4);
    CHECK(find_duplicates(SearchBounds::up_to(259)) == known_duplicates());
    CHECK(find_duplicates(SearchBounds::up_to(1'000'000)) == known_duplicates());
}

TEST_CASE("no value up to 1e6 has three representations") {
    CHECK(max_multiplicity(SearchBounds::up_to(1'000'000)) == 2);
}

TEST_CASE("known_duplicates table") {
    const auto& k = known_duplicates();
    REQUIRE(k.size() == 5);
    CHECK(k[0].value == 5);
    CHECK(k[2].value == 17);
    CHECK(k[2].first == Representation::of(4, 0));
    CHECK(k[2].second == Representation::of(3, 2));
    for (const auto& p : k) {
        CHECK(p.first.x > p.second.x);
        CHECK(p.first.y < p.second.y);
        CHECK(p.first.value == p.value);
        CHECK(p.second.value == p.value);
    }
}

TEST_CASE("DuplicatePair normalizes and validates") {
    const auto p = DuplicatePair::of(Representation::of(1, 1), Representation::of(2, 0));
    CHECK(p.first.x == 2);
    CHECK_THROWS_AS(DuplicatePair::of(Representation::of(1, 1), Representation::of(3, 0)), std::invalid_argument);
    CHECK_THROWS_AS(DuplicatePair::of(Representation::of(1, 1), Representation::of(1, 1)), std::invalid_argument);
}

TEST_CASE("values beyond 64 bits") {
    mpz_class cap = pow2(200);
    std::size_t n = 0;
    mpz_class prev = 0;
    SumStream s(SearchBounds::up_to(cap));
    while (auto g = s.next()) {
        REQUIRE(g->value > prev);
        prev = g->value;
        ++n;
    }
    CHECK(prev <= cap);
    // Count rows directly: for each y with 3^y < cap, x ranges over 2^x <= cap - 3^y.
    std::size_t expected = 0;
    for (Exponent y = 0; pow3(y) < cap; ++y) {
        mpz_class room = cap - pow3(y);
        expected += mpz_sizeinbase(room.get_mpz_t(), 2);
    }
    // Each of the five duplicates merges two representations into one value.
    CHECK(n == expected - 5);
}
