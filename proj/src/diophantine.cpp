#include "dup23/diophantine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dup23 {

namespace {

std::vector<DifferenceCollision> collect(std::map<mpz_class, std::vector<ExponentPair>>& seen) {
    std::vector<DifferenceCollision> out;
    for (auto& [key, pairs] : seen) {
        if (pairs.size() < 2) continue;
        std::sort(pairs.begin(), pairs.end(), [](const ExponentPair& l, const ExponentPair& r) {
            return l.x != r.x ? l.x > r.x : l.b > r.b;
        });
        out.push_back({key, std::move(pairs)});
    }
    return out;
}

void check_box(Exponent maxX, Exponent maxB) {
    if (maxX < 1 || maxB < 1) throw std::invalid_argument("exponent bounds must be >= 1");
}

// log2 of v if v is a power of two, else nullopt.
std::optional<std::uint64_t> exact_log2(const mpz_class& v) {
    if (v <= 0 || mpz_popcount(v.get_mpz_t()) != 1) return std::nullopt;
    return mpz_scan1(v.get_mpz_t(), 0);
}

std::optional<std::uint64_t> exact_log3(mpz_class v) {
    if (v <= 0) return std::nullopt;
    std::uint64_t k = 0;
    while (v > 1) {
        if (!mpz_divisible_ui_p(v.get_mpz_t(), 3)) return std::nullopt;
        v /= 3;
        ++k;
    }
    return k;
}

}  // namespace

std::vector<DifferenceCollision> signed_diff_collisions(Exponent maxX, Exponent maxB) {
    check_box(maxX, maxB);
    std::map<mpz_class, std::vector<ExponentPair>> seen;
    mpz_class p2 = 1;
    for (Exponent x = 1; x <= maxX; ++x) {
        p2 *= 2;
        mpz_class p3 = 1;
        for (Exponent b = 1; b <= maxB; ++b) {
            p3 *= 3;
            seen[p2 - p3].push_back({x, b});
        }
    }
    return collect(seen);
}

std::vector<DifferenceCollision> abs_diff_collisions(Exponent maxExp) {
    check_box(maxExp, maxExp);
    std::map<mpz_class, std::vector<ExponentPair>> seen;
    mpz_class p2 = 1;
    for (Exponent x = 1; x <= maxExp; ++x) {
        p2 *= 2;
        mpz_class p3 = 1;
        for (Exponent b = 1; b <= maxExp; ++b) {
            p3 *= 3;
            seen[abs(p2 - p3)].push_back({x, b});
        }
    }
    return collect(seen);
}

const std::vector<DifferenceCollision>& bennett_collisions() {
    static const std::vector<DifferenceCollision> table{
        {-1, {{3, 2}, {1, 1}}},
        {5, {{5, 3}, {3, 1}}},
        {13, {{8, 5}, {4, 1}}},
    };
    return table;
}

std::vector<DuplicatePair> solve_y_positive() {
    std::vector<DuplicatePair> out;
    for (const auto& row : bennett_collisions()) {
        // 2^x - 3^b = differenceC = 2^a - 3^y, x > a.
        const ExponentPair& hi = row.witnesses.at(0);
        const ExponentPair& lo = row.witnesses.at(1);
        const mpz_class& differenceC = row.c;
        if (PowerDifference::of(hi.x, hi.b).c != differenceC || PowerDifference::of(lo.x, lo.b).c != differenceC)
            throw std::logic_error("Bennett table row does not reproduce its difference");
        out.push_back(DuplicatePair::of(hi.x, lo.b, lo.x, hi.b));
    }
    return out;
}

ABranch derive_a_from_b(std::uint64_t b) {
    if (b == 0) throw std::invalid_argument("b must be >= 1");
    if (b % 2 == 1)
        return {ABranch::Kind::OddB, static_cast<Exponent>(v2_pow3_minus1(b)), "2 || 3^b - 1 for odd b, so a = 1"};
    if (b % 4 == 2)
        return {ABranch::Kind::TwiceOddB, static_cast<Exponent>(v2_pow3_minus1(b)), "2 || b, so a = 2 + v_2(b) = 3"};
    return {ABranch::Kind::Excluded, std::nullopt,
            "4 | b forces 5 | 3^b - 1 = 2^a(2^s - 1), so 5 | 2^s - 1 hence 4 | s, contradicting s odd"};
}

std::vector<RNSolution> rn_solutions(Exponent maxM) {
    if (maxM < 3) throw std::invalid_argument("maxM must be >= 3");
    std::vector<RNSolution> out;
    for (Exponent m = 3; m <= maxM; ++m) {
        mpz_class target = pow2(m) - 7;
        mpz_class w;
        mpz_sqrt(w.get_mpz_t(), target.get_mpz_t());
        if (w * w == target) out.push_back({m, w});
    }
    return out;
}

YZeroResult solve_y_zero(Exponent maxCheck) {
    if (maxCheck < 2) throw std::invalid_argument("maxCheck must be >= 2");

    YZeroResult result;
    YZeroTrace& tr = result.trace;
    auto fail = [](const char* what) { throw std::logic_error(std::string("y = 0 replay: ") + what); };

    // 2^x + 1 = 2^a + 3^b, s = x - a, so 2^a (2^s - 1) = 3^b - 1 and 3 does
    // not divide the right side.
    tr.sOddRequired = true;
    for (Exponent s = 1; s <= maxCheck; ++s)
        tr.sOddRequired &= (v3_pow2_minus1(s) == 0) == (s % 2 == 1);
    if (!tr.sOddRequired) fail("v_3(2^s - 1) = 0 does not track odd s");
    tr.steps.push_back("3 does not divide 3^b - 1, so v_3(2^s - 1) = 0 and s is odd");

    // Odd b: a = 1 and 2^x - 3^b = 1.
    tr.branches.emplace_back(1, derive_a_from_b(1));
    mpz_class p3 = 1;
    for (Exponent b = 1; b <= maxCheck; ++b) {
        p3 *= 3;
        if (auto x = exact_log2(p3 + 1); x && *x <= maxCheck) tr.unitDifference.push_back({static_cast<Exponent>(*x), b});
    }
    for (const auto& row : bennett_collisions())
        if (row.c == 1) fail("1 appears among Bennett's collisions");
    // 1 is outside {-1, 5, 13}, so its one representation is 2^2 - 3.
    tr.unitDifferenceFromBennett.push_back({2, 1});
    if (tr.unitDifference != tr.unitDifferenceFromBennett) fail("2^x - 3^b = 1 has an unexpected solution");
    for (const auto& [x, b] : tr.unitDifference) {
        if (b % 2 == 0) continue;
        const Exponent a = *derive_a_from_b(b).a;
        if (x <= a || (x - a) % 2 == 0) continue;
        result.duplicates.push_back(DuplicatePair::of(x, 0, a, b));
        tr.steps.push_back("b odd: a = 1, 2^x - 3^b = 1 gives x = " + std::to_string(x) + ", b = " + std::to_string(b));
    }

    // Even b.
    tr.branches.emplace_back(2, derive_a_from_b(2));
    tr.branches.emplace_back(4, derive_a_from_b(4));
    unsigned ord5 = 1;
    while ((1u << ord5) % 5 != 1) ++ord5;
    tr.fourDividesBExcluded = (pow3(4) - 1) % 5 == 0 && ord5 == 4;
    if (!tr.fourDividesBExcluded) fail("4 | b exclusion");
    tr.steps.push_back("b even: 4 | b would need 4 | s, so 2 || b and a = 3");

    // b = 2c, c odd, z = (3^c + 1)/4: 2^s - 1 = 2z^2 - z, (4z - 1)^2 = 2^(s+3) - 7,
    // s = 2t + 1: (2^(t+2) - 4z + 1)(2^(t+2) + 4z - 1) = 7.
    constexpr unsigned kProduct = 7;
    bool solved = false;
    for (unsigned d1 = 1; d1 * d1 < kProduct; ++d1) {
        if (kProduct % d1 != 0) continue;
        const unsigned d2 = kProduct / d1;
        if ((d1 + d2) % 2 != 0) continue;
        const auto tPlus2 = exact_log2((d1 + d2) / 2);
        const unsigned w = (d2 - d1) / 2;  // 4z - 1
        if (!tPlus2 || *tPlus2 < 2 || w % 4 != 3) continue;
        const auto c = exact_log3(w);
        if (!c || *c % 2 == 0) continue;
        if (solved) fail("more than one divisor split solves the factorization");
        solved = true;
        tr.divisorSplit = {d1, d2};
        tr.t = *tPlus2 - 2;
        tr.z = (w + 1) / 4;
        tr.oddCofactorC = *c;
        tr.s = 2 * tr.t + 1;
        tr.b = 2 * tr.oddCofactorC;
        tr.a = *derive_a_from_b(tr.b).a;
        tr.x = tr.a + tr.s;
    }
    if (!solved) fail("no divisor split of 7 solves the factorization");
    const mpz_class z = tr.z;
    tr.quadraticHolds = pow2(static_cast<Exponent>(tr.s)) - 1 == 2 * z * z - z;
    if (!tr.quadraticHolds) fail("2^s - 1 = 2z^2 - z");
    tr.steps.push_back("divisor split (" + std::to_string(tr.divisorSplit.first) + ", " +
                       std::to_string(tr.divisorSplit.second) + ") gives t = " + std::to_string(tr.t) +
                       ", z = " + std::to_string(tr.z) + ", c = " + std::to_string(tr.oddCofactorC) +
                       ", s = " + std::to_string(tr.s) + ", b = " + std::to_string(tr.b));

    for (const auto& rn : rn_solutions(maxCheck + 3))
        if (rn.m % 2 == 0 && rn.w % 4 == 3) tr.constrainedRN.push_back(rn);
    if (tr.constrainedRN.size() != 1 || tr.constrainedRN[0].w != 4 * z - 1 || tr.constrainedRN[0].m != tr.s + 3)
        fail("(4z - 1)^2 = 2^(s+3) - 7 cross-check");

    const auto x = static_cast<Exponent>(tr.x);
    const auto a = static_cast<Exponent>(tr.a);
    const auto b = static_cast<Exponent>(tr.b);
    result.duplicates.push_back(DuplicatePair::of(x, 0, a, b));
    tr.steps.push_back("back-substitution: (x, a, b) = (" + std::to_string(x) + ", " + std::to_string(a) + ", " +
                       std::to_string(b) + ")");

    std::sort(result.duplicates.begin(), result.duplicates.end(),
              [](const DuplicatePair& l, const DuplicatePair& r) { return l.value < r.value; });
    return result;
}

}  // namespace dup23
