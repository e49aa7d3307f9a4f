#pragma once

// Named verification suites. Each suite binds a family of invariants from
// the numerical modules into a reproducible report: same seed, same
// numbers, same verdict.

#include <cstdint>
#include <string>
#include <vector>

namespace zetacomb {

struct Check {
    std::string label;
    double max_error;
    double tolerance;
    bool passed;
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<Check> checks;

    bool passed() const {
        for (const Check& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

const std::vector<std::string>& suite_names();

// Throws UnknownSuite for names outside suite_names().
VerificationReport run_suite(const std::string& name, std::uint64_t seed);

} // namespace zetacomb
