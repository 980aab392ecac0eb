#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace gsqg::harness {

enum class Relation { LessEqual, GreaterEqual, Equal };

struct Assertion {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    Relation relation = Relation::LessEqual;
    bool pass = false;
};

/// Outcome of one experiment or probe: assertions, recorded values and artifacts.
struct ExperimentReport {
    std::string id;
    std::string config_digest;
    std::vector<Assertion> assertions;
    std::vector<std::pair<std::string, std::string>> values;  ///< recorded, not asserted
    std::vector<std::filesystem::path> artifacts;

    [[nodiscard]] bool passed() const;

    /// Appends an assertion; non-finite measurements always fail.
    bool check(const std::string& name, double measured, double threshold, Relation relation = Relation::LessEqual);
    /// Appends an assertion with an explicit outcome (threshold recorded as given).
    bool check_flag(const std::string& name, bool pass);
    void record(const std::string& key, double value);
    void record(const std::string& key, const std::string& value);

    /// key=value lines: id, config_digest, pass, assertion.<name>.{measured,threshold,relation,pass},
    /// value.<key>, artifact.<i>.
    [[nodiscard]] std::string to_text() const;
};

/// Writes <dir>/<id>.report atomically and returns the path.
std::filesystem::path write_report(const std::filesystem::path& dir, const ExperimentReport& report);

}  // namespace gsqg::harness
