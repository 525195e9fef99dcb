#pragma once

#include <optional>
#include <queue>
#include <vector>

#include <gmpxx.h>

#include "dup23/valuation.hpp"

namespace dup23 {

mpz_class pow2(Exponent e);
mpz_class pow3(Exponent e);

/// value == 2^x + 3^y
struct Representation {
    Exponent x = 0;
    Exponent y = 0;
    mpz_class value = 2;

    static Representation of(Exponent x, Exponent y) { return {x, y, pow2(x) + pow3(y)}; }

    friend bool operator==(const Representation& l, const Representation& r) {
        return l.x == r.x && l.y == r.y && l.value == r.value;
    }
};

/// Two representations of one value, normalized so that first.x > second.x
/// (and hence first.y < second.y).
struct DuplicatePair {
    mpz_class value;
    Representation first;
    Representation second;

    /// Orders the two representations; throws std::invalid_argument if they
    /// do not share a value or coincide.
    static DuplicatePair of(Representation u, Representation v);
    static DuplicatePair of(Exponent x, Exponent y, Exponent a, Exponent b) {
        return of(Representation::of(x, y), Representation::of(a, b));
    }

    friend bool operator==(const DuplicatePair& l, const DuplicatePair& r) {
        return l.value == r.value && l.first == r.first && l.second == r.second;
    }
};

/// All bounds are inclusive. Sum enumeration requires valueCap; the exponent
/// caps, when present, further restrict x and y.
struct SearchBounds {
    std::optional<mpz_class> valueCap;
    std::optional<Exponent> maxExp2;
    std::optional<Exponent> maxExp3;

    static SearchBounds up_to(mpz_class cap) { return {std::move(cap), std::nullopt, std::nullopt}; }
};

/// One value of A004050 with every (x, y) producing it, by descending x.
struct SumGroup {
    mpz_class value;
    std::vector<Representation> reps;
};

/// Ascending stream of the values 2^x + 3^y <= cap.
///
/// Keeps one cursor per y (with 3^y < cap) in a min-heap keyed on the exact
/// value; each pop advances that row's x. Memory is O(number of rows).
class SumStream {
public:
    explicit SumStream(const SearchBounds& bounds);

    std::optional<SumGroup> next();

private:
    struct Cursor {
        mpz_class value;
        mpz_class pow3;
        Exponent x;
        Exponent y;
    };
    struct Later {
        bool operator()(const Cursor& l, const Cursor& r) const {
            int c = cmp(l.value, r.value);
            return c != 0 ? c > 0 : l.x < r.x;
        }
    };

    void push_if_in_range(Cursor c);

    mpz_class cap_;
    std::optional<Exponent> maxExp2_;
    std::priority_queue<Cursor, std::vector<Cursor>, Later> heap_;
};

/// Materialized form of SumStream.
std::vector<SumGroup> enumerate_sums(const SearchBounds& bounds);

/// Every value <= cap with two or more representations, ascending. A value
/// with k representations contributes all k(k-1)/2 pairs.
std::vector<DuplicatePair> find_duplicates(const SearchBounds& bounds);

/// Largest representation count seen for any value <= cap.
std::size_t max_multiplicity(const SearchBounds& bounds);

/// 5, 11, 17, 35, 259 with their two representations each.
const std::vector<DuplicatePair>& known_duplicates();

}  // namespace dup23
