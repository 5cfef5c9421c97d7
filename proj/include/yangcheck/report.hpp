#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace yangcheck {

// Outcome of one named check.  Inconclusive is reserved for runs whose
// rewriting evidence cannot separate pass from fail; it is never folded
// into Fail so downstream tooling can treat the two differently.
enum class CheckStatus { Pass, Fail, Inconclusive, NotApplicable };

const char* to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string details;
    long long elapsed_ms = 0;
};

// One run's worth of checks with enough context to reproduce it.  The
// exit code is derived, never stored, so it cannot drift from the counts.
struct VerificationReport {
    std::string command;
    std::map<std::string, std::string> params;
    std::vector<CheckResult> checks;

    void add(CheckResult r) { checks.push_back(std::move(r)); }

    std::size_t count(CheckStatus s) const;
    // True when literally every check is a Pass; a clean-but-qualified run
    // (some checks not applicable) is exit code 0 without all_passed.
    bool all_passed() const;

    // 0 when nothing failed and nothing was inconclusive, 1 when any
    // check failed, 2 when the only blemishes are inconclusive checks.
    int exit_code() const;

    std::string to_json() const;
    std::string to_text() const;
    static VerificationReport from_json(const std::string& text);
};

}  // namespace yangcheck
