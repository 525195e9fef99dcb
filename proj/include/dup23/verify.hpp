#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dup23 {

enum class Profile { Quick, Full };

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

/// Runs the acceptance checks. Quick skips the checks marked full-only.
/// If progress is set, one line is written per check as it finishes.
std::vector<CheckResult> run_acceptance(Profile profile, std::ostream* progress = nullptr);

std::string format_check(const CheckResult& r);

}  // namespace dup23
