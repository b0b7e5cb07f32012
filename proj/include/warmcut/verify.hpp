#ifndef WARMCUT_VERIFY_HPP
#define WARMCUT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace warmcut {

/*
 * Self-check suites runnable from the CLI. Each check compares library
 * output against an independent reference (statevector simulation, closed
 * forms, or a proved bound), so a miscoded constant anywhere in the engine
 * shows up as a failed check rather than a silently wrong benchmark.
 */

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // worst observed margin or the failing case
};

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool passed() const {
        for (const CheckResult& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/* Suites: "oracle", "closedform", "guarantees". Unknown names throw. */
VerifyReport run_verify_suite(const std::string& suite, std::uint64_t seed);

}  // namespace warmcut

#endif
