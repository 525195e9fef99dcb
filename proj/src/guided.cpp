#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "dup23/diophantine.hpp"

namespace dup23 {

namespace {

// ln(2^s - 1) = s ln 2 + ln(1 - 2^-s); the correction is below 1e-19 past s = 64.
double ln_pow2_minus1(Exponent s) {
    double v = s * std::numbers::ln2;
    if (s <= 64) v += std::log1p(-std::ldexp(1.0, -static_cast<int>(s)));
    return v;
}

double ln_pow3_minus1(Exponent d) {
    static const double ln3 = std::log(3.0);
    double v = d * ln3;
    if (d <= 40) v += std::log1p(-std::pow(3.0, -static_cast<double>(d)));
    return v;
}

struct Stripe {
    std::vector<GuidedSolution> found;
    GuidedStats stats;
};

void search_stripe(Exponent sLo, Exponent sHi, Exponent maxD, Stripe& out) {
    for (Exponent s = sLo; s <= sHi; ++s) {
        const auto y = static_cast<Exponent>(v3_pow2_minus1(s));
        for (Exponent d = 1; d <= maxD; ++d) {
            ++out.stats.pairsExamined;
            if (std::abs(log_gap(s, d)) >= kLogPrefilterTolerance) continue;
            ++out.stats.prefilterSurvivors;
            const auto a = static_cast<Exponent>(v2_pow3_minus1(d));
            if (pow2(a) * (pow2(s) - 1) != pow3(y) * (pow3(d) - 1)) continue;
            out.found.push_back({a + s, y, a, y + d, s, d});
        }
    }
}

}  // namespace

double log_gap(Exponent s, Exponent d) {
    const unsigned a = v2_pow3_minus1(d);
    const unsigned y = v3_pow2_minus1(s);
    static const double ln3 = std::log(3.0);
    return (a * std::numbers::ln2 + ln_pow2_minus1(s)) - (y * ln3 + ln_pow3_minus1(d));
}

std::vector<GuidedSolution> guided_search(Exponent maxS, Exponent maxD, unsigned threads, GuidedStats* stats) {
    if (maxS < 1 || maxD < 1) throw std::invalid_argument("maxS and maxD must be >= 1");
    threads = std::clamp<unsigned>(threads, 1, maxS);

    std::vector<Stripe> stripes(threads);
    {
        std::vector<std::jthread> workers;
        const Exponent width = maxS / threads;
        const Exponent extra = maxS % threads;
        Exponent lo = 1;
        for (unsigned i = 0; i < threads; ++i) {
            const Exponent hi = lo + width + (i < extra ? 1 : 0) - 1;
            workers.emplace_back(search_stripe, lo, hi, maxD, std::ref(stripes[i]));
            lo = hi + 1;
        }
    }

    std::vector<GuidedSolution> all;
    GuidedStats total;
    for (auto& st : stripes) {
        all.insert(all.end(), st.found.begin(), st.found.end());
        total.pairsExamined += st.stats.pairsExamined;
        total.prefilterSurvivors += st.stats.prefilterSurvivors;
    }
    std::sort(all.begin(), all.end(), [](const GuidedSolution& l, const GuidedSolution& r) {
        int c = cmp(l.value(), r.value());
        return c != 0 ? c < 0 : std::tie(l.s, l.d) < std::tie(r.s, r.d);
    });
    if (stats) *stats = total;
    return all;
}

}  // namespace dup23
