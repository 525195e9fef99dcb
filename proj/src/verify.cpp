#include "dup23/verify.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "dup23/cli.hpp"
#include "dup23/diophantine.hpp"
#include "dup23/powersum.hpp"
#include "dup23/valuation.hpp"

namespace dup23 {

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

struct Check {
    int id;
    bool fullOnly;
    std::string name;
    double maxSeconds;  // 0: no time limit
    std::function<Outcome()> body;
};

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::string cli_output(const std::vector<std::string>& args, int& code) {
    std::ostringstream out, err;
    code = run_cli(args, out, err);
    return out.str();
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : " | ") + e;
    return s;
}

Outcome expect_lines(const std::vector<std::string>& args, const std::vector<std::string>& expected) {
    int code = 0;
    const auto got = lines_of(cli_output(args, code));
    if (code != kExitOk) return {false, "exit code " + std::to_string(code)};
    if (got != expected) return {false, "got " + join(got)};
    return {true, std::to_string(got.size()) + " lines as expected"};
}

Outcome dupes_to_million() {
    return expect_lines({"dupes", "--limit", "1000000", "--format", "plain"},
                        {"5 = 2^2+3^0 = 2^1+3^1", "11 = 2^3+3^1 = 2^1+3^2", "17 = 2^4+3^0 = 2^3+3^2",
                         "35 = 2^5+3^1 = 2^3+3^3", "259 = 2^8+3^1 = 2^4+3^5"});
}

Outcome signed_diffs() {
    return expect_lines({"diffs", "--max-exp", "30", "--signed"},
                        {"-1 = 2^3-3^2 = 2^1-3^1", "5 = 2^5-3^3 = 2^3-3^1", "13 = 2^8-3^5 = 2^4-3^1"});
}

Outcome abs_diffs() {
    int code = 0;
    const auto got = lines_of(cli_output({"diffs", "--max-exp", "30", "--abs"}, code));
    if (code != kExitOk) return {false, "exit code " + std::to_string(code)};
    std::vector<std::string> keys;
    for (const auto& line : got) keys.push_back(line.substr(0, line.find(' ')));
    const std::vector<std::string> expected{"1", "5", "7", "13", "23"};
    if (keys != expected) return {false, "keys " + join(keys)};
    return {true, "keys 1 5 7 13 23"};
}

Outcome valuation_oracle() {
    constexpr std::uint64_t kMax = 100'000;
    std::uint64_t mismatches = 0;
    mpz_class p3 = 1;
    mpz_class p2m1;
    for (std::uint64_t n = 1; n <= kMax; ++n) {
        p3 *= 3;
        if (v2_pow3_minus1(n) != vp(2, mpz_class(p3 - 1))) ++mismatches;
        p2m1 = pow2(static_cast<Exponent>(n)) - 1;
        if (v3_pow2_minus1(n) != vp(3, p2m1)) ++mismatches;
    }
    return {mismatches == 0, std::to_string(mismatches) + " mismatches over n <= 100000"};
}

Outcome theorem_replays() {
    std::vector<std::string> pos;
    for (const auto& p : solve_y_positive()) pos.push_back(p.value.get_str());
    const auto zero = solve_y_zero(100);
    std::vector<std::string> zer;
    for (const auto& p : zero.duplicates) zer.push_back(p.value.get_str());
    const auto& t = zero.trace;
    const bool traceOk = t.z == 1 && t.s == 1 && t.b == 2 && t.divisorSplit == std::pair<unsigned, unsigned>{1, 7};
    const bool ok = pos == std::vector<std::string>{"11", "35", "259"} && zer == std::vector<std::string>{"5", "17"} &&
                    traceOk;
    return {ok, "y>0: " + join(pos) + "; y=0: " + join(zer) + "; z=" + std::to_string(t.z) +
                    " s=" + std::to_string(t.s) + " b=" + std::to_string(t.b) + " split=(" +
                    std::to_string(t.divisorSplit.first) + "," + std::to_string(t.divisorSplit.second) + ")"};
}

Outcome ramanujan_nagell() {
    const std::vector<RNSolution> expected{{3, 1}, {4, 3}, {5, 5}, {7, 11}, {15, 181}};
    const auto got = rn_solutions(200);
    std::string s;
    for (const auto& r : got) s += "(" + std::to_string(r.m) + "," + r.w.get_str() + ")";
    return {got == expected, s};
}

Outcome guided_vs_enumeration() {
    // Values <= 10^6 need x <= 19 and b <= 12, so gaps <= 64 cover them.
    const mpz_class cap = 1'000'000;
    std::vector<DuplicatePair> guided;
    for (const auto& g : guided_search(64, 64))
        if (g.value() <= cap) guided.push_back(g.as_pair());
    const auto enumerated = find_duplicates(SearchBounds::up_to(cap));
    return {guided == enumerated && guided.size() == 5,
            std::to_string(guided.size()) + " guided vs " + std::to_string(enumerated.size()) + " enumerated"};
}

Outcome guided_large() {
    int code = 0;
    const auto got = lines_of(cli_output({"guided", "--max-s", "2000", "--max-d", "2000", "--threads", "4"}, code));
    if (code != kExitOk) return {false, "exit code " + std::to_string(code)};
    const auto sols = guided_search(2000, 2000, 4);
    std::vector<DuplicatePair> pairs;
    for (const auto& g : sols) pairs.push_back(g.as_pair());
    return {got.size() == 5 && pairs == known_duplicates(), std::to_string(got.size()) + " solutions"};
}

Outcome determinism() {
    int c1 = 0, c2 = 0, c3 = 0;
    const std::vector<std::string> args{"guided", "--max-s", "200", "--max-d", "200", "--threads", "4"};
    const auto first = cli_output(args, c1);
    const auto second = cli_output(args, c2);
    const auto serial = cli_output({"guided", "--max-s", "200", "--max-d", "200"}, c3);
    const bool ok = c1 == 0 && c2 == 0 && c3 == 0 && first == second && first == serial && !first.empty();
    return {ok, ok ? "byte-identical across runs and thread counts" : "outputs differ"};
}

}  // namespace

std::string format_check(const CheckResult& r) {
    std::ostringstream s;
    s << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << r.detail << "; "
      << static_cast<long long>(r.seconds * 1000) << " ms)";
    return s.str();
}

std::vector<CheckResult> run_acceptance(Profile profile, std::ostream* progress) {
    const std::vector<Check> checks{
        {1, false, "dupes --limit 1000000 lists exactly 5, 11, 17, 35, 259", 5, dupes_to_million},
        {2, false, "diffs --max-exp 30 --signed: c in {-1, 5, 13}", 0, signed_diffs},
        {3, false, "diffs --max-exp 30 --abs: keys {1, 5, 7, 13, 23}", 0, abs_diffs},
        {4, false, "closed-form valuations match big-integer valuations, n <= 1e5", 60, valuation_oracle},
        {5, false, "theorem replays for y > 0 and y = 0", 0, theorem_replays},
        {6, false, "rn_solutions(200)", 0, ramanujan_nagell},
        {7, false, "guided search equals enumeration up to 1e6", 0, guided_vs_enumeration},
        {8, true, "guided --max-s 2000 --max-d 2000 finds exactly five", 600, guided_large},
        {9, false, "guided 200x200 output is deterministic under --threads 4", 0, determinism},
    };

    std::vector<CheckResult> results;
    for (const auto& check : checks) {
        if (check.fullOnly && profile == Profile::Quick) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o{false, ""};
        try {
            o = check.body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (check.maxSeconds > 0 && secs >= check.maxSeconds) {
            o.passed = false;
            o.detail += "; over the " + std::to_string(static_cast<int>(check.maxSeconds)) + " s budget";
        }
        results.push_back({check.id, check.name, o.passed, o.detail, secs});
        if (progress) *progress << format_check(results.back()) << '\n' << std::flush;
    }
    return results;
}

}  // namespace dup23
