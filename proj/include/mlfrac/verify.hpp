#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mlfrac {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double threshold = 0.0;
    bool passed = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    std::size_t passed() const;
    std::size_t failed() const;
    double worst_residual() const;
    bool ok() const { return failed() == 0; }
};

enum class Suite { Identities, Reductions, Oracle, Transforms };

const char* suite_name(Suite s);

/// Runs the invariant checks of one module group. Exceptions thrown by a
/// check are recorded as a failed check with infinite residual.
SuiteReport run_suite(Suite s);

} // namespace mlfrac
