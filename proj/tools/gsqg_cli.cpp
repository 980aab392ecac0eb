// gsqg: batch driver for checks, simulations, experiments and probes.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "gsqg/config/config.hpp"
#include "gsqg/error.hpp"
#include "gsqg/harness/commands.hpp"

namespace {

namespace fs = std::filesystem;
using gsqg::harness::ExperimentReport;

enum Exit { kOk = 0, kAssertion = 1, kUsage = 2, kRuntime = 3 };

struct Options {
    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    int jobs = 1;
};

gsqg::config::Config load(const Options& opt) {
    gsqg::config::Config cfg = opt.config_path.empty() ? gsqg::config::Config{} : gsqg::config::load_config(opt.config_path);
    if (opt.seed) cfg.seed = *opt.seed;
    if (!opt.out_dir.empty()) cfg.out_dir = opt.out_dir;
    return cfg;
}

std::optional<fs::path> artifact_dir(const Options& opt) {
    if (opt.out_dir.empty()) return std::nullopt;
    return fs::path(opt.out_dir);
}

int finish(const ExperimentReport& rep) {
    std::cout << rep.to_text();
    return rep.passed() ? kOk : kAssertion;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral solver and verification harness for dissipative gSQG equations", "gsqg"};
    app.require_subcommand(1);
    Options opt;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", opt.config_path, "Configuration file")->check(CLI::ExistingFile);
        cmd->add_option("--out", opt.out_dir, "Output directory");
        cmd->add_option("--seed", opt.seed, "Seed override");
        cmd->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
    };

    auto* check = app.add_subcommand("check", "Check multiplier classes and admissibility of the suite");
    add_common(check);

    auto* simulate = app.add_subcommand("simulate", "Run the solver and write norms and snapshots");
    add_common(simulate);

    std::string experiments;
    auto* verify = app.add_subcommand("verify", "Run a comma-separated list of experiments ('all' for every one)");
    verify->add_option("experiments", experiments, "Experiment list");
    add_common(verify);

    std::string probe_kind;
    auto* probe = app.add_subcommand("probe", "Run a probe: commutator, product, convexity or logidentity");
    probe->add_option("kind", probe_kind, "Probe name")
        ->required()
        ->check(CLI::IsMember({"commutator", "product", "convexity", "logidentity"}));
    add_common(probe);

    std::string snapshot;
    auto* norms = app.add_subcommand("norms", "Compute norms of a snapshot");
    norms->add_option("snapshot", snapshot, "Snapshot file")->required();
    add_common(norms);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*check) return finish(gsqg::harness::cmd_check(load(opt)));
        if (*simulate) {
            const auto cfg = load(opt);
            const auto out = gsqg::harness::cmd_simulate(cfg, cfg.out_dir);
            gsqg::harness::write_report(cfg.out_dir, out.report);
            return finish(out.report);
        }
        if (*verify) {
            const auto cfg = load(opt);
            const auto names = gsqg::harness::parse_experiment_list(experiments);
            const auto out = gsqg::harness::cmd_verify(cfg, names, artifact_dir(opt), opt.jobs);
            for (const auto& r : out.reports) std::cout << r.to_text() << '\n';
            return finish(out.summary);
        }
        if (*probe) return finish(gsqg::harness::cmd_probe(probe_kind, load(opt), artifact_dir(opt)));
        if (*norms) return finish(gsqg::harness::cmd_norms(snapshot, load(opt)));
    } catch (const gsqg::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    } catch (const gsqg::BlowupError& e) {
        std::cerr << e.what() << " (last finite state at t = " << e.last_good_time() << ")\n";
        return kRuntime;
    } catch (const gsqg::Error& e) {
        std::cerr << e.what() << '\n';
        return e.code() == gsqg::Errc::UsageError ? kUsage : kRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRuntime;
    }
    return kUsage;
}
