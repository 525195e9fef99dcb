// Runs every acceptance check (quick and full) and prints one line each.
#include <algorithm>
#include <iostream>

#include "dup23/verify.hpp"

int main() {
    const auto results = dup23::run_acceptance(dup23::Profile::Full, &std::cout);
    const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
    std::cout << results.size() - failed << "/" << results.size() << " acceptance checks passed\n";
    return failed == 0 ? 0 : 1;
}
