#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gsqg/harness/experiments.hpp"
#include "gsqg/solver/run.hpp"

namespace gsqg::harness {

/// Class membership of every symbol (p in C, m in D, omega in W, nu in S(m))
/// and admissibility over the gamma grid.
ExperimentReport cmd_check(const Config& cfg);

struct SimulationOutput {
    ExperimentReport report;
    solver::RunResult result;
};

/// Runs the config and writes norms.csv plus initial.gsqg and final.gsqg
/// snapshots under out_dir. BlowupError propagates.
SimulationOutput cmd_simulate(const Config& cfg, const std::filesystem::path& out_dir);

struct VerifyOutcome {
    ExperimentReport summary;  ///< one flag per experiment
    std::vector<ExperimentReport> reports;
};

/// Splits a comma-separated list; "all" expands to every experiment.
/// Throws UsageError for unknown names.
std::vector<std::string> parse_experiment_list(const std::string& list);

/// Runs the named experiments on up to jobs worker threads. Reports come back
/// in list order and, with an artifact directory, are written there.
VerifyOutcome cmd_verify(const Config& cfg, const std::vector<std::string>& names, const ArtifactDir& dir = {},
                         int jobs = 1);

/// kind in {commutator, product, convexity, logidentity}; UsageError otherwise.
ExperimentReport cmd_probe(const std::string& kind, const Config& cfg, const ArtifactDir& dir = {});

/// Norms of a snapshot under the config's suite. Records values only.
ExperimentReport cmd_norms(const std::filesystem::path& snapshot, const Config& cfg);

}  // namespace gsqg::harness
