#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dup23/powersum.hpp"
#include "dup23/valuation.hpp"

namespace dup23 {

/// c == 2^x - 3^b with x, b >= 1.
struct PowerDifference {
    Exponent x = 1;
    Exponent b = 1;
    mpz_class c = -1;

    static PowerDifference of(Exponent x, Exponent b) { return {x, b, pow2(x) - pow3(b)}; }
};

struct ExponentPair {
    Exponent x = 0;
    Exponent b = 0;

    friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

/// A difference key shared by at least two (x, b) pairs, witnesses ordered by
/// descending x. For absolute collisions the key is |2^x - 3^b|.
struct DifferenceCollision {
    mpz_class c;
    std::vector<ExponentPair> witnesses;
};

/// Collisions of 2^x - 3^b over 1 <= x <= maxX, 1 <= b <= maxB, sorted by c.
std::vector<DifferenceCollision> signed_diff_collisions(Exponent maxX, Exponent maxB);

/// Collisions of |2^x - 3^b| over 1 <= x, b <= maxExp, sorted by key.
std::vector<DifferenceCollision> abs_diff_collisions(Exponent maxExp);

/// The three signed collisions with positive exponents (c = -1, 5, 13).
/// Taken on trust from Bennett's theorem; only checked in finite boxes here.
const std::vector<DifferenceCollision>& bennett_collisions();

/// Duplicates 2^x + 3^y = 2^a + 3^b with y > 0, one per Bennett row.
///
/// Each row 2^x - 3^b = 2^a - 3^y = differenceC rearranges directly into
/// 2^x + 3^y = 2^a + 3^b.
std::vector<DuplicatePair> solve_y_positive();

/// Branch of the y = 0 argument that fixes a from the parity of b.
struct ABranch {
    enum class Kind { OddB, TwiceOddB, Excluded };

    Kind kind = Kind::OddB;
    std::optional<Exponent> a;
    std::string reason;
};

/// b odd: a = 1. b = 2 mod 4: a = 3. 4 | b: excluded. Throws for b == 0.
ABranch derive_a_from_b(std::uint64_t b);

/// w^2 == 2^m - 7
struct RNSolution {
    Exponent m = 3;
    mpz_class w = 1;

    friend bool operator==(const RNSolution& l, const RNSolution& r) { return l.m == r.m && l.w == r.w; }
};

/// All (m, w) with 3 <= m <= maxM and w^2 = 2^m - 7.
std::vector<RNSolution> rn_solutions(Exponent maxM);

/// Machine-checked record of the y = 0 case. Symbols follow the argument:
/// s = x - a, b = 2c (c odd, stored as oddCofactorC), s = 2t + 1,
/// z = (3^c + 1)/4.
struct YZeroTrace {
    /// v_3(2^s - 1) vanishes exactly for odd s, checked for s <= maxCheck.
    bool sOddRequired = false;

    /// Solutions of 2^x - 3^b = 1 with 1 <= x, b <= maxCheck.
    std::vector<ExponentPair> unitDifference;
    /// Same fact, read off the trusted Bennett table.
    std::vector<ExponentPair> unitDifferenceFromBennett;

    /// Branch outcomes for b = 1, 2, 4 (one representative per class).
    std::vector<std::pair<std::uint64_t, ABranch>> branches;
    /// 5 | 3^4 - 1 and the least s with 5 | 2^s - 1 is 4.
    bool fourDividesBExcluded = false;

    /// Positive divisor split (d1, d2) of 7 with d1 < d2 that solved the
    /// factorization (2^(t+2) - 4z + 1)(2^(t+2) + 4z - 1) = 7.
    std::pair<unsigned, unsigned> divisorSplit{0, 0};
    std::uint64_t t = 0;
    std::uint64_t z = 0;
    std::uint64_t oddCofactorC = 0;
    std::uint64_t s = 0;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t x = 0;
    /// 2^s - 1 == 2z^2 - z at the solution.
    bool quadraticHolds = false;
    /// rn_solutions restricted to even m (odd s) and w = 3 mod 4.
    std::vector<RNSolution> constrainedRN;

    /// Human readable step log.
    std::vector<std::string> steps;
};

struct YZeroResult {
    std::vector<DuplicatePair> duplicates;
    YZeroTrace trace;
};

/// Replays the y = 0 case end to end. Throws std::invalid_argument for
/// maxCheck < 2 and std::logic_error if any step fails to reproduce.
YZeroResult solve_y_zero(Exponent maxCheck);

/// (x, y, a, b) solving 2^x + 3^y = 2^a + 3^b with gaps s = x - a and d = b - y.
struct GuidedSolution {
    Exponent x = 0;
    Exponent y = 0;
    Exponent a = 0;
    Exponent b = 0;
    Exponent s = 1;
    Exponent d = 1;

    mpz_class value() const { return pow2(x) + pow3(y); }
    DuplicatePair as_pair() const { return DuplicatePair::of(x, y, a, b); }

    friend bool operator==(const GuidedSolution&, const GuidedSolution&) = default;
};

/// Absolute tolerance on the log comparison that gates exact confirmation.
inline constexpr double kLogPrefilterTolerance = 1e-6;

/// ln(2^a (2^s - 1)) - ln(3^y (3^d - 1)) with a and y forced by (s, d).
double log_gap(Exponent s, Exponent d);

struct GuidedStats {
    std::uint64_t pairsExamined = 0;
    std::uint64_t prefilterSurvivors = 0;
};

/// Every solution with 1 <= s <= maxS and 1 <= d <= maxD, sorted by value.
///
/// For fixed gaps, 2^a (2^s - 1) = 3^y (3^d - 1) pins a = v_2(3^d - 1) and
/// y = v_3(2^s - 1), so each (s, d) yields one candidate. Candidates pass a
/// double-precision log test before the exact big-integer check. With
/// threads > 1 the s range is split into stripes; output does not depend on
/// the thread count.
std::vector<GuidedSolution> guided_search(Exponent maxS, Exponent maxD, unsigned threads = 1,
                                          GuidedStats* stats = nullptr);

}  // namespace dup23
