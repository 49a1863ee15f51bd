#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wigner {

struct SuiteResult {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    std::size_t trials = 0;
    bool passed = false;
};

/// Runs every module invariant suite with a deterministic seeded generator.
/// Each suite reports its worst observed deviation against the tolerance the
/// suite is specified at.
std::vector<SuiteResult> run_verify_suites(std::uint64_t seed, std::size_t trials);

}  // namespace wigner
