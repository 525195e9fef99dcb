#include "dup23/powersum.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dup23 {

mpz_class pow2(Exponent e) {
    mpz_class r;
    mpz_setbit(r.get_mpz_t(), e);
    return r;
}

mpz_class pow3(Exponent e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, e);
    return r;
}

DuplicatePair DuplicatePair::of(Representation u, Representation v) {
    if (u.value != v.value) throw std::invalid_argument("representations differ in value");
    if (u.x == v.x) throw std::invalid_argument("representations must be distinct");
    if (u.x < v.x) std::swap(u, v);
    mpz_class value = u.value;
    return {std::move(value), std::move(u), std::move(v)};
}

SumStream::SumStream(const SearchBounds& bounds) : maxExp2_(bounds.maxExp2) {
    if (!bounds.valueCap) throw std::invalid_argument("sum enumeration needs a value cap");
    if (*bounds.valueCap < 2) throw std::invalid_argument("value cap must be >= 2");
    cap_ = *bounds.valueCap;

    mpz_class p3 = 1;
    for (Exponent y = 0; p3 < cap_; ++y, p3 *= 3) {
        if (bounds.maxExp3 && y > *bounds.maxExp3) break;
        push_if_in_range({p3 + 1, p3, 0, y});
    }
}

void SumStream::push_if_in_range(Cursor c) {
    if (c.value > cap_) return;
    if (maxExp2_ && c.x > *maxExp2_) return;
    heap_.push(std::move(c));
}

std::optional<SumGroup> SumStream::next() {
    if (heap_.empty()) return std::nullopt;
    SumGroup group{heap_.top().value, {}};
    while (!heap_.empty() && heap_.top().value == group.value) {
        Cursor c = heap_.top();
        heap_.pop();
        group.reps.push_back({c.x, c.y, c.value});
        // 2^(x+1) + 3^y = value + 2^x
        c.value += c.value - c.pow3;
        ++c.x;
        push_if_in_range(std::move(c));
    }
    std::sort(group.reps.begin(), group.reps.end(),
              [](const Representation& l, const Representation& r) { return l.x > r.x; });
    return group;
}

std::vector<SumGroup> enumerate_sums(const SearchBounds& bounds) {
    std::vector<SumGroup> out;
    SumStream stream(bounds);
    while (auto g = stream.next()) out.push_back(std::move(*g));
    return out;
}

std::vector<DuplicatePair> find_duplicates(const SearchBounds& bounds) {
    std::vector<DuplicatePair> out;
    SumStream stream(bounds);
    while (auto g = stream.next()) {
        const auto& reps = g->reps;
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j)
                out.push_back(DuplicatePair::of(reps[i], reps[j]));
    }
    return out;
}

std::size_t max_multiplicity(const SearchBounds& bounds) {
    std::size_t best = 0;
    SumStream stream(bounds);
    while (auto g = stream.next()) best = std::max(best, g->reps.size());
    return best;
}

const std::vector<DuplicatePair>& known_duplicates() {
    static const std::vector<DuplicatePair> table{
        DuplicatePair::of(2, 0, 1, 1),
        DuplicatePair::of(3, 1, 1, 2),
        DuplicatePair::of(4, 0, 3, 2),
        DuplicatePair::of(5, 1, 3, 3),
        DuplicatePair::of(8, 1, 4, 5),
    };
    return table;
}

}  // namespace dup23
