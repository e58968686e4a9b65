#pragma once

#include <string>
#include <vector>

namespace cmcgk::cli {

inline constexpr int kReportSchemaVersion = 1;

// One named residual with its tolerance.  "expected_fail" marks negative
// controls: the check passes when the residual exceeds the tolerance.
struct CheckResult {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool expected_fail = false;

    bool pass() const { return expected_fail ? value > tolerance : value <= tolerance; }
};

struct Report {
    std::string command;  // reconstruct | verify | sister-check
    std::string subject;  // config path or suite name
    std::string status = "ok";  // ok | aborted | config-error
    std::string note;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    void add(const std::string& name, double value, double tolerance,
             bool expected_fail = false);
};

// Deterministic JSON serialization (no timestamps in the payload).
std::string to_json(const Report& report);

// One "PASS|XFAIL|FAIL name value <= tol" line per check, plus a summary.
std::string to_text(const Report& report);

void write_file(const std::string& path, const std::string& contents);

}  // namespace cmcgk::cli
