#include "dup23/cli.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "dup23/diophantine.hpp"
#include "dup23/powersum.hpp"
#include "dup23/valuation.hpp"
#include "dup23/verify.hpp"

namespace dup23 {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

mpz_class parse_natural(const std::string& text, const char* what) {
    mpz_class v;
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }) ||
        v.set_str(text, 10) != 0)
        throw UsageError(std::string(what) + " must be a nonnegative decimal integer, got '" + text + "'");
    return v;
}

std::string term(const Representation& r) {
    return "2^" + std::to_string(r.x) + "+3^" + std::to_string(r.y);
}

std::string term(const ExponentPair& p) {
    return "2^" + std::to_string(p.x) + "-3^" + std::to_string(p.b);
}

Json reps_json(const std::vector<Representation>& reps) {
    Json arr = Json::array();
    for (const auto& r : reps) arr.push_back({r.x, r.y});
    return arr;
}

void write_pair(std::ostream& out, OutputFormat fmt, std::size_t index, const DuplicatePair& p) {
    switch (fmt) {
        case OutputFormat::Plain:
            out << p.value.get_str() << " = " << term(p.first) << " = " << term(p.second) << '\n';
            break;
        case OutputFormat::Jsonl:
            out << Json{{"value", p.value.get_str()}, {"reps", reps_json({p.first, p.second})}}.dump() << '\n';
            break;
        case OutputFormat::Bfile:
            out << index << ' ' << p.value.get_str() << '\n';
            break;
    }
}

const std::map<std::string, OutputFormat> kFormats{
    {"plain", OutputFormat::Plain}, {"jsonl", OutputFormat::Jsonl}, {"bfile", OutputFormat::Bfile}};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sums and differences of powers of 2 and 3"};
    app.name("dup23");
    app.require_subcommand(1);

    std::string valP, valN;
    auto* valuation = app.add_subcommand("valuation", "p-adic valuation v_p(n)");
    valuation->add_option("p", valP, "prime base")->required();
    valuation->add_option("n", valN, "natural number >= 1")->required();

    std::string limit;
    OutputFormat format = OutputFormat::Plain;
    auto* enumerate = app.add_subcommand("enumerate", "values 2^x+3^y <= N (A004050)");
    auto* dupes = app.add_subcommand("dupes", "values <= N with two representations (A085634)");
    for (auto* sub : {enumerate, dupes}) {
        sub->add_option("--limit", limit, "inclusive value cap")->required();
        sub->add_option("--format", format, "plain, jsonl or bfile")
            ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    }

    Exponent maxExp = 0;
    bool absolute = false;
    auto* diffs = app.add_subcommand("diffs", "nonunique differences 2^x-3^b");
    diffs->add_option("--max-exp", maxExp, "exponent bound for both x and b")->required();
    auto* signedFlag = diffs->add_flag("--signed", "key on 2^x-3^b (default)");
    auto* absFlag = diffs->add_flag("--abs", absolute, "key on |2^x-3^b| (A207079)");
    signedFlag->excludes(absFlag);

    Exponent maxS = 0, maxD = 0;
    unsigned threads = 1;
    auto* guided = app.add_subcommand("guided", "valuation-guided duplicate search over gaps (s, d)");
    guided->add_option("--max-s", maxS, "largest s = x - a")->required();
    guided->add_option("--max-d", maxD, "largest d = b - y")->required();
    guided->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 1024u));

    std::string profile = "quick";
    auto* verify = app.add_subcommand("verify", "run the acceptance checks");
    verify->add_option("--profile", profile, "quick or full")->check(CLI::IsMember({"quick", "full"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*valuation) {
            const mpz_class p = parse_natural(valP, "p");
            if (p < 2 || p > 1'000'000) throw UsageError("p must be in [2, 1000000]");
            const mpz_class n = parse_natural(valN, "n");
            if (n < 1) throw UsageError("n must be >= 1");
            out << vp(static_cast<unsigned>(p.get_ui()), n) << '\n';
        } else if (*enumerate) {
            const mpz_class cap = parse_natural(limit, "--limit");
            if (cap < 2) throw UsageError("--limit must be >= 2");
            SumStream stream(SearchBounds::up_to(cap));
            std::size_t index = 0;
            while (auto g = stream.next()) {
                ++index;
                if (format == OutputFormat::Plain)
                    out << g->value.get_str() << '\n';
                else if (format == OutputFormat::Jsonl)
                    out << Json{{"value", g->value.get_str()}, {"reps", reps_json(g->reps)}}.dump() << '\n';
                else
                    out << index << ' ' << g->value.get_str() << '\n';
            }
        } else if (*dupes) {
            const mpz_class cap = parse_natural(limit, "--limit");
            if (cap < 2) throw UsageError("--limit must be >= 2");
            std::size_t index = 0;
            for (const auto& p : find_duplicates(SearchBounds::up_to(cap))) write_pair(out, format, ++index, p);
        } else if (*diffs) {
            if (maxExp < 1) throw UsageError("--max-exp must be >= 1");
            const auto rows = absolute ? abs_diff_collisions(maxExp) : signed_diff_collisions(maxExp, maxExp);
            for (const auto& row : rows) {
                out << row.c.get_str();
                for (const auto& w : row.witnesses) out << " = " << (absolute ? "|" + term(w) + "|" : term(w));
                out << '\n';
            }
        } else if (*guided) {
            if (maxS < 1 || maxD < 1) throw UsageError("--max-s and --max-d must be >= 1");
            for (const auto& g : guided_search(maxS, maxD, threads)) {
                const DuplicatePair p = g.as_pair();
                out << p.value.get_str() << " = " << term(p.first) << " = " << term(p.second) << " (s=" << g.s
                    << ", d=" << g.d << ")\n";
            }
        } else if (*verify) {
            const auto results = run_acceptance(profile == "full" ? Profile::Full : Profile::Quick, &out);
            const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
            out << (ok ? "all checks passed" : "verification FAILED") << '\n';
            return ok ? kExitOk : kExitVerifyFailed;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace dup23
