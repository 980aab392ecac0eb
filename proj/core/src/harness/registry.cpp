#include "gsqg/error.hpp"
#include "gsqg/harness/experiments.hpp"
#include "gsqg/harness/probes.hpp"

namespace gsqg::harness {

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names{
        "threshold", "threshold_iterlog", "logidentity", "energy",  "maxprin",     "convexity", "lp",
        "stability", "kato",              "smoothing",   "commutator", "product", "global_euler", "viscosity"};
    return names;
}

ExperimentReport run_experiment(const std::string& name, const Config& cfg, const ArtifactDir& dir) {
    if (name == "threshold") return exp_threshold(cfg, multipliers::LogFamily::Log, dir);
    if (name == "threshold_iterlog") return exp_threshold(cfg, multipliers::LogFamily::IterLog, dir);
    if (name == "logidentity") return exp_log_identity(cfg, dir);
    if (name == "energy") return exp_energy_balance(cfg, {}, dir);
    if (name == "maxprin") return exp_max_principle(cfg, {}, dir);
    if (name == "convexity") return exp_convexity(cfg, {}, dir);
    if (name == "lp") return exp_lp_machinery(cfg, dir);
    if (name == "stability") return exp_stability(cfg, {}, dir);
    if (name == "kato") return exp_kato_split(cfg, {}, dir);
    if (name == "smoothing") return exp_smoothing(cfg, {}, dir);
    if (name == "commutator") return exp_commutator(cfg, dir);
    if (name == "product") return exp_product(cfg, dir);
    if (name == "global_euler") return exp_global_euler(cfg, {}, dir);
    if (name == "viscosity") return exp_viscosity(cfg, {}, dir);
    throw Error(Errc::UsageError, "unknown experiment '" + name + "'");
}

}  // namespace gsqg::harness
