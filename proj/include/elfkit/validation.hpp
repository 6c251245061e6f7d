#pragma once

#include <string>
#include <vector>

namespace elfkit {

enum class ValidationLevel { Fast, Full };

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;  // first failure, or a short summary when passing
};

// Named invariant suites over the whole library. Fast keeps L <= 2 and
// enumerations at n <= 10; Full raises to L <= 3 (AF), L <= 4 (AB), n <= 13
// and adds the L = 1 ancilla-based optimality scan.
std::vector<CheckResult> run_validation_checks(ValidationLevel level);

}  // namespace elfkit
